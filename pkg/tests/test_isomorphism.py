import networkx as nx
import numpy as np
import pytest

from igelkit.core.errors import OracleSizeError
from igelkit.core.families import (
    gen_complete_bipartite,
    gen_cycle,
    gen_disjoint_union,
    gen_petersen,
    gen_prism,
    gen_random_graph,
    gen_shrikhande,
)
from igelkit.core.graph import Graph, permute, random_permutation
from igelkit.core.isomorphism import MAX_VERTICES, brute_force_isomorphic


def to_networkx(graph):
    g = nx.Graph()
    g.add_nodes_from(range(graph.n))
    g.add_edges_from(graph.edges())
    return g


def test_relabelled_copies_are_isomorphic():
    g = gen_petersen()
    perm = random_permutation(g.n, np.random.default_rng(0))
    assert brute_force_isomorphic(g, permute(g, perm))


def test_regular_pairs_are_told_apart(two_triangles):
    assert not brute_force_isomorphic(gen_cycle(6), two_triangles)
    assert not brute_force_isomorphic(gen_complete_bipartite(3, 3), gen_prism(3))


def test_quick_rejects():
    assert not brute_force_isomorphic(gen_cycle(5), gen_cycle(6))
    assert not brute_force_isomorphic(Graph.from_edges(4, [(0, 1)]), Graph.from_edges(4, []))


def test_empty_graphs():
    assert brute_force_isomorphic(Graph.from_edges(0, []), Graph.from_edges(0, []))


def test_size_cap():
    assert MAX_VERTICES == 12
    big = gen_shrikhande()
    with pytest.raises(OracleSizeError):
        brute_force_isomorphic(big, big)


@pytest.mark.parametrize("seed", range(20))
def test_agrees_with_networkx(seed):
    rng = np.random.default_rng(seed)
    for _ in range(10):
        n = int(rng.integers(1, 9))
        g1 = gen_random_graph(n, 0.5, seed=int(rng.integers(1 << 30)))
        if rng.random() < 0.5:
            g2 = permute(g1, random_permutation(n, rng))
        else:
            g2 = gen_random_graph(n, 0.5, seed=int(rng.integers(1 << 30)))
        assert brute_force_isomorphic(g1, g2) == nx.is_isomorphic(to_networkx(g1), to_networkx(g2))


def test_disconnected_graphs():
    g = gen_disjoint_union(gen_cycle(4), gen_cycle(3))
    h = gen_disjoint_union(gen_cycle(3), gen_cycle(4))
    assert brute_force_isomorphic(g, h)
