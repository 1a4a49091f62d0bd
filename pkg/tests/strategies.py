from itertools import combinations

from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from igelkit.core.graph import Graph

PROPERTY_SETTINGS = settings(
    max_examples=200,
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)


@st.composite
def graphs(draw, min_vertices=0, max_vertices=10):
    n = draw(st.integers(min_value=min_vertices, max_value=max_vertices))
    pairs = list(combinations(range(n), 2))
    mask = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return Graph.from_edges(n, [p for p, keep in zip(pairs, mask) if keep])


@st.composite
def graphs_with_permutation(draw, min_vertices=1, max_vertices=10):
    graph = draw(graphs(min_vertices, max_vertices))
    perm = draw(st.permutations(range(graph.n)))
    return graph, list(perm)


@st.composite
def graphs_with_vertex(draw, min_vertices=1, max_vertices=10):
    graph = draw(graphs(min_vertices, max_vertices))
    v = draw(st.integers(min_value=0, max_value=graph.n - 1))
    return graph, v
