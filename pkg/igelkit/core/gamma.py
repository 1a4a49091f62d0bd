"""Gamma-extended IGEL encoding.

Each vertex u of the ego-network of v is recorded as
(distance, same-layer degree, outward-layer degree): edges to vertices at
the same distance from v, and edges to vertices one hop further out. Edges
back towards v are not recorded. On SRG(n, d, beta, gamma) at depth 2 every
vertex encodes as {(0,0,d):1, (1,beta,d-beta-1):d, (2,d-gamma,0):n-d-1}.
"""

from collections import Counter
from functools import partial

from igelkit.core.encoding import GammaVertexEncoding, GraphEncoding, SparseVector, sparse_from_counts
from igelkit.core.errors import InvalidParameterError, NotInEgoNetworkError, VertexRangeError
from igelkit.core.graph import Graph
from igelkit.core.igel import ball, check_alpha
from igelkit.core.workers import run_chunked


def _check_vertex(graph, v):
    if not 0 <= v < graph.n:
        raise VertexRangeError(f"vertex {v} out of range for n={graph.n}")


def rel_degree(graph: Graph, u: int, v: int, p: int, alpha: int) -> int:
    """Edges (u, w) inside the ego-network of ``v`` whose far end sits at
    distance l(u, v) + p from ``v``; ``p`` is 0 or 1."""
    check_alpha(alpha)
    if p not in (0, 1):
        raise InvalidParameterError(f"p must be 0 or 1, got {p}")
    _check_vertex(graph, u)
    _check_vertex(graph, v)
    dist = ball(graph.adjacency, v, alpha)
    if u not in dist:
        raise NotInEgoNetworkError(f"vertex {u} is more than {alpha} hops from {v}")
    target = dist[u] + p
    return sum(1 for w in graph.adjacency[u] if dist.get(w) == target)


def _encode(adjacency, v, alpha):
    dist = ball(adjacency, v, alpha)
    counts = Counter()
    for u, lam in dist.items():
        same = outward = 0
        for w in adjacency[u]:
            lw = dist.get(w)
            if lw == lam:
                same += 1
            elif lw == lam + 1:
                outward += 1
        counts[lam, same, outward] += 1
    return GammaVertexEncoding.from_counter(alpha, counts)


def gamma_encode_vertex(graph: Graph, v: int, alpha: int) -> GammaVertexEncoding:
    check_alpha(alpha)
    _check_vertex(graph, v)
    return _encode(graph.adjacency, v, alpha)


def _encode_range(graph, alpha, vertices):
    adjacency = graph.adjacency
    return [_encode(adjacency, v, alpha) for v in vertices]


def gamma_encode_all(graph: Graph, alpha: int, workers=1, chunk_size=4096,
                     progress=False) -> list[GammaVertexEncoding]:
    check_alpha(alpha)
    return run_chunked(partial(_encode_range, graph, alpha), range(graph.n),
                       workers=workers, chunk_size=chunk_size, progress=progress,
                       description=f"gamma alpha={alpha}")


def encode_graph_gamma(graph: Graph, alpha: int, workers=1) -> GraphEncoding:
    return GraphEncoding(alpha, gamma_encode_all(graph, alpha, workers=workers), method="gamma")


def gamma_equivalent(g1: Graph, g2: Graph, alpha: int) -> bool:
    return encode_graph_gamma(g1, alpha).canonical == encode_graph_gamma(g2, alpha).canonical


def vectorize_gamma(enc: GammaVertexEncoding, d_cap: int) -> SparseVector:
    """Index ((distance * (d_cap+1)) + d0) * (d_cap+1) + d1, both degrees
    capped at ``d_cap``."""
    if d_cap < 1:
        raise InvalidParameterError(f"d_cap must be >= 1, got {d_cap}")
    width = d_cap + 1
    counts = Counter()
    for lam, d0, d1, count in enc.entries:
        counts[(lam * width + min(d0, d_cap)) * width + min(d1, d_cap)] += count
    return sparse_from_counts((enc.alpha + 1) * width * width, d_cap, counts)
