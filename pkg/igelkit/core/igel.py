"""IGEL structural encodings.

Every vertex v is described by the multiset of (hop distance from v, degree
inside the ego-network) pairs over all vertices of its ego-network: the
subgraph induced by the vertices within ``alpha`` hops of v.
"""

from collections import Counter
from functools import partial
from typing import Sequence

from igelkit.core.encoding import (
    ConcatEncoding,
    GraphEncoding,
    SparseVector,
    VertexEncoding,
    sparse_from_counts,
)
from igelkit.core.errors import InvalidParameterError, VertexRangeError
from igelkit.core.graph import Graph, ego_network
from igelkit.core.workers import run_chunked


def check_alpha(alpha) -> int:
    if isinstance(alpha, bool) or not isinstance(alpha, int) or alpha < 1:
        raise InvalidParameterError(f"alpha must be an integer >= 1, got {alpha!r}")
    return alpha


def check_alphas(alphas) -> tuple[int, ...]:
    alphas = tuple(alphas)
    if not alphas:
        raise InvalidParameterError("at least one alpha is required")
    return tuple(check_alpha(a) for a in alphas)


def ball(adjacency, root: int, alpha: int) -> dict[int, int]:
    """Hop distance of every vertex within ``alpha`` hops of ``root``."""
    dist = {root: 0}
    frontier = [root]
    for depth in range(1, alpha + 1):
        reached = []
        for u in frontier:
            for w in adjacency[u]:
                if w not in dist:
                    dist[w] = depth
                    reached.append(w)
        if not reached:
            break
        frontier = reached
    return dist


def _encode(adjacency, v, alpha):
    dist = ball(adjacency, v, alpha)
    counts = Counter()
    for u, lam in dist.items():
        # edges between two vertices at distance alpha stay inside the ego-network
        degree = sum(1 for w in adjacency[u] if w in dist)
        counts[lam, degree] += 1
    return VertexEncoding.from_counter(alpha, counts)


def igel_encode_vertex(graph: Graph, v: int, alpha: int) -> VertexEncoding:
    """Single-pass BFS encoding of vertex ``v``."""
    check_alpha(alpha)
    if not 0 <= v < graph.n:
        raise VertexRangeError(f"vertex {v} out of range for n={graph.n}")
    return _encode(graph.adjacency, v, alpha)


def igel_encode_vertex_naive(graph: Graph, v: int, alpha: int) -> VertexEncoding:
    """Reference encoder: materializes the ego-network first, then reads
    distances and degrees off the subgraph."""
    check_alpha(alpha)
    ego, _ = ego_network(graph, v, alpha)
    dist = ego.bfs_distances(0)
    counts = Counter((dist[u], ego.degree(u)) for u in range(ego.n))
    return VertexEncoding.from_counter(alpha, counts)


def _encode_range(graph, alpha, vertices):
    adjacency = graph.adjacency
    return [_encode(adjacency, v, alpha) for v in vertices]


def igel_encode_all(graph: Graph, alpha: int, workers=1, chunk_size=4096,
                    progress=False) -> list[VertexEncoding]:
    """Encodes every vertex; element v is the encoding of vertex v."""
    check_alpha(alpha)
    return run_chunked(partial(_encode_range, graph, alpha), range(graph.n),
                       workers=workers, chunk_size=chunk_size, progress=progress,
                       description=f"igel alpha={alpha}")


def vectorize(enc: VertexEncoding, d_cap: int) -> SparseVector:
    """Sparse vector with index distance * (d_cap + 1) + min(degree, d_cap)."""
    if d_cap < 1:
        raise InvalidParameterError(f"d_cap must be >= 1, got {d_cap}")
    counts = Counter()
    for lam, delta, count in enc.entries:
        counts[lam * (d_cap + 1) + min(delta, d_cap)] += count
    return sparse_from_counts((enc.alpha + 1) * (d_cap + 1), d_cap, counts)


def vectorize_concat(vectors: Sequence[SparseVector]) -> SparseVector:
    """Concatenates vectors, offsetting each by the preceding dimensions."""
    if not vectors:
        raise InvalidParameterError("nothing to concatenate")
    dim = sum(v.dim for v in vectors)
    entries, offset = [], 0
    for vec in vectors:
        entries.extend((i + offset, value) for i, value in vec.entries)
        offset += vec.dim
    return SparseVector(dim, vectors[0].d_cap, tuple(entries))


def encode_graph(graph: Graph, alpha: int, workers=1) -> GraphEncoding:
    return GraphEncoding(alpha, igel_encode_all(graph, alpha, workers=workers), method="igel")


def igel_equivalent(g1: Graph, g2: Graph, alpha: int) -> bool:
    return encode_graph(g1, alpha).canonical == encode_graph(g2, alpha).canonical


def encode_graph_concat(graph: Graph, alphas, per_vertex: bool = True,
                        workers=1) -> ConcatEncoding:
    """Encodings of ``graph`` at every depth in ``alphas``.

    ``per_vertex`` pairs up each vertex's encodings across depths, which is
    what concatenated feature vectors carry; with ``per_vertex=False`` only
    the per-depth graph encodings are compared.
    """
    alphas = check_alphas(alphas)
    per_depth = [igel_encode_all(graph, a, workers=workers) for a in alphas]
    parts = [GraphEncoding(a, encs, method="igel") for a, encs in zip(alphas, per_depth)]
    rows = None
    if per_vertex:
        rows = [tuple(encs[v].to_bytes() for encs in per_depth) for v in range(graph.n)]
    return ConcatEncoding(parts, rows)
