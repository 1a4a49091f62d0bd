import pytest
from hypothesis import given

from igelkit.core.errors import InvalidParameterError
from igelkit.core.families import (
    gen_cycle,
    gen_disjoint_union,
    gen_path,
    gen_petersen,
    gen_random_regular,
    gen_rook,
    gen_shrikhande,
    gen_star,
)
from igelkit.core.graph import Graph, permute
from igelkit.core.wl import ColorRefiner, wl_collection_signatures, wl_joint_refine, wl_refine
from tests.strategies import PROPERTY_SETTINGS, graphs, graphs_with_permutation


def test_regular_graph_stops_after_one_round():
    coloring = wl_refine(gen_cycle(6))
    assert coloring.iterations == 1
    assert coloring.num_classes == 1
    assert coloring.histogram == ((0, 6),)


def test_path_refinement():
    p4 = wl_refine(gen_path(4))
    assert p4.iterations == 1
    assert p4.num_classes == 2

    p5 = wl_refine(gen_path(5))
    assert p5.iterations == 2
    assert p5.num_classes == 3
    assert p5.class_counts == (2, 3, 3)
    assert p5.colors[0] == p5.colors[4]
    assert p5.colors[1] == p5.colors[3]
    assert len({p5.colors[0], p5.colors[1], p5.colors[2]}) == 3


def test_max_iters_zero_is_degree_coloring():
    coloring = wl_refine(gen_star(3), max_iters=0)
    assert coloring.iterations == 0
    assert coloring.class_sizes() == (1, 3)


def test_negative_max_iters():
    with pytest.raises(InvalidParameterError):
        wl_refine(gen_star(3), max_iters=-1)


def test_empty_graph():
    coloring = wl_refine(Graph.from_edges(0, []))
    assert coloring.iterations == 0
    assert coloring.num_classes == 0


def test_joint_refine_cannot_split_regular_pairs(two_triangles):
    _, _, at = wl_joint_refine(gen_cycle(6), two_triangles)
    assert at is None
    _, _, at = wl_joint_refine(gen_shrikhande(), gen_rook(4))
    assert at is None


def test_joint_refine_reports_first_round():
    _, _, at = wl_joint_refine(gen_path(4), gen_star(3))
    assert at == 0
    triangle_and_edge = gen_disjoint_union(gen_cycle(3), gen_path(2))
    _, _, at = wl_joint_refine(gen_path(5), triangle_and_edge)
    assert at == 1


def test_joint_colors_are_shared():
    c1, c2, _ = wl_joint_refine(gen_path(3), gen_path(3))
    assert c1.colors == c2.colors


def test_refiner_offsets():
    refiner = ColorRefiner([gen_path(2), gen_cycle(3)])
    assert refiner.offsets == [0, 2, 5]
    refiner.run()
    assert refiner.colors_of(0) != refiner.colors_of(1)


def test_collection_signatures():
    sigs = wl_collection_signatures([gen_cycle(6), gen_disjoint_union(gen_cycle(3), gen_cycle(3)),
                                     gen_path(6), permute(gen_path(6), [5, 3, 1, 0, 2, 4])])
    assert sigs[0] == sigs[1]
    assert sigs[0] != sigs[2]
    assert sigs[2] == sigs[3]


@pytest.mark.parametrize("seed", range(10))
def test_random_regular_graphs_collapse(seed):
    g = gen_random_regular(20, 3, seed=seed)
    coloring = wl_refine(g)
    assert coloring.num_classes == 1
    assert coloring.iterations == 1


def test_petersen_single_class():
    assert wl_refine(gen_petersen()).num_classes == 1


@PROPERTY_SETTINGS
@given(graphs())
def test_colors_are_dense_and_monotone(graph):
    coloring = wl_refine(graph)
    assert sorted(set(coloring.colors)) == list(range(coloring.num_classes))
    counts = coloring.class_counts
    assert all(a <= b for a, b in zip(counts, counts[1:]))
    assert sum(count for _, count in coloring.histogram) == graph.n


@PROPERTY_SETTINGS
@given(graphs_with_permutation())
def test_histogram_is_permutation_invariant(case):
    graph, perm = case
    assert wl_refine(graph).histogram == wl_refine(permute(graph, perm)).histogram
    _, _, at = wl_joint_refine(graph, permute(graph, perm))
    assert at is None
