import time

import pytest

from igelkit.core.families import gen_random_regular
from igelkit.core.igel import igel_encode_all

pytestmark = pytest.mark.slow


def per_vertex_seconds(n, alpha, repeats=2):
    graph = gen_random_regular(n, 3, seed=n)
    graph.adjacency  # build the cached neighbor tuples outside the timed region
    best = float("inf")
    for _ in range(repeats):
        started = time.perf_counter()
        igel_encode_all(graph, alpha)
        best = min(best, time.perf_counter() - started)
    return best / n


@pytest.mark.parametrize("alpha", [1, 2])
def test_encoding_time_grows_linearly(alpha):
    costs = [per_vertex_seconds(n, alpha) for n in (1_000, 10_000, 100_000)]
    assert max(costs) <= 2 * min(costs), costs
