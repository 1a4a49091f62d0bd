"""Exact isomorphism test for small graphs by backtracking search."""

from igelkit.core.errors import OracleSizeError
from igelkit.core.graph import Graph

MAX_VERTICES = 12


def _search_order(graph):
    # Grow the order along edges so adjacency checks prune early: start at a
    # max-degree vertex, then always take the unplaced vertex with the most
    # placed neighbors (ties: higher degree, lower id).
    adjacency = graph.adjacency
    placed, order = set(), []
    remaining = set(range(graph.n))
    while remaining:
        best = max(remaining, key=lambda u: (
            sum(1 for w in adjacency[u] if w in placed), len(adjacency[u]), -u))
        order.append(best)
        placed.add(best)
        remaining.discard(best)
    return order


def brute_force_isomorphic(g1: Graph, g2: Graph) -> bool:
    """Exact isomorphism test for graphs with at most 12 vertices."""
    for g in (g1, g2):
        if g.n > MAX_VERTICES:
            raise OracleSizeError(
                f"brute-force isomorphism is capped at {MAX_VERTICES} vertices "
                f"(got {g.n}); screen larger graphs with encodings instead")
    if g1.n != g2.n or g1.m != g2.m:
        return False
    if sorted(g1.degrees().tolist()) != sorted(g2.degrees().tolist()):
        return False

    adj1 = [set(nbrs) for nbrs in g1.adjacency]
    adj2 = [set(nbrs) for nbrs in g2.adjacency]
    order = _search_order(g1)
    mapping, used = {}, set()

    def extend(depth):
        if depth == len(order):
            return True
        u = order[depth]
        for x in range(g2.n):
            if x in used or len(adj2[x]) != len(adj1[u]):
                continue
            if any((w in adj1[u]) != (mapping[w] in adj2[x]) for w in mapping):
                continue
            mapping[u] = x
            used.add(x)
            if extend(depth + 1):
                return True
            del mapping[u]
            used.discard(x)
        return False

    return extend(0)
