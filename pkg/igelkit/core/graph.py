"""Immutable simple undirected graphs in compressed (CSR) adjacency form."""

import math
from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Sequence

import numpy as np

from igelkit.core.errors import (
    InvalidParameterError,
    SelfLoopError,
    VertexRangeError,
)

# Diameter reported for graphs with more than one connected component.
DISCONNECTED = math.inf


class Graph:
    """Simple undirected graph on the dense vertex set 0..n-1.

    Adjacency is stored as two read-only numpy arrays: ``indptr`` (n + 1
    offsets) and ``indices`` (concatenated, ascending neighbor lists).
    """

    __slots__ = ("_n", "_indptr", "_indices", "_adjacency")

    def __init__(self, n: int, indptr, indices, validate: bool = True):
        indptr = np.ascontiguousarray(indptr, dtype=np.int64)
        indices = np.ascontiguousarray(indices, dtype=np.int64)
        if validate:
            _check_csr(n, indptr, indices)
        indptr.flags.writeable = False
        indices.flags.writeable = False
        self._n = int(n)
        self._indptr = indptr
        self._indices = indices
        self._adjacency = None

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        """Builds a graph from an undirected edge iterable.

        Duplicate edges (in either orientation) collapse; self-loops and out of
        range endpoints are rejected.
        """
        if n < 0:
            raise InvalidParameterError(f"vertex count must be >= 0, got {n}")
        pairs = np.asarray(list(edges), dtype=np.int64).reshape(-1, 2)
        if len(pairs):
            if pairs.min() < 0 or pairs.max() >= n:
                bad = pairs[(pairs < 0).any(axis=1) | (pairs >= n).any(axis=1)][0]
                raise VertexRangeError(
                    f"edge ({bad[0]}, {bad[1]}) out of range for n={n}")
            loops = pairs[:, 0] == pairs[:, 1]
            if loops.any():
                v = int(pairs[loops][0, 0])
                raise SelfLoopError(f"self-loop on vertex {v}")
        both = np.concatenate([pairs, pairs[:, ::-1]]) if len(pairs) else pairs
        both = np.unique(both, axis=0) if len(both) else both
        counts = np.bincount(both[:, 0], minlength=n) if len(both) else np.zeros(n, np.int64)
        indptr = np.zeros(n + 1, dtype=np.int64)
        np.cumsum(counts, out=indptr[1:])
        indices = both[:, 1] if len(both) else np.zeros(0, dtype=np.int64)
        # np.unique sorts rows lexicographically, so lists come out ascending
        return cls(n, indptr, indices, validate=False)

    @classmethod
    def from_adjacency_lists(cls, lists: Sequence[Iterable[int]]) -> "Graph":
        edges = [(u, w) for u, nbrs in enumerate(lists) for w in nbrs]
        return cls.from_edges(len(lists), edges)

    # -- basic queries ---------------------------------------------------

    @property
    def n(self) -> int:
        return self._n

    @property
    def m(self) -> int:
        return len(self._indices) // 2

    @property
    def indptr(self) -> np.ndarray:
        return self._indptr

    @property
    def indices(self) -> np.ndarray:
        return self._indices

    @property
    def adjacency(self) -> tuple[tuple[int, ...], ...]:
        """Per-vertex neighbor tuples; the hot path for BFS in pure Python."""
        if self._adjacency is None:
            flat = self._indices.tolist()
            ptr = self._indptr.tolist()
            self._adjacency = tuple(
                tuple(flat[ptr[v]:ptr[v + 1]]) for v in range(self._n))
        return self._adjacency

    def _check_vertex(self, v: int) -> None:
        if not 0 <= v < self._n:
            raise VertexRangeError(f"vertex {v} out of range for n={self._n}")

    def neighbors(self, v: int) -> tuple[int, ...]:
        self._check_vertex(v)
        return self.adjacency[v]

    def degree(self, v: int) -> int:
        self._check_vertex(v)
        return int(self._indptr[v + 1] - self._indptr[v])

    def degrees(self) -> np.ndarray:
        return np.diff(self._indptr)

    def max_degree(self) -> int:
        return int(self.degrees().max()) if self._n else 0

    def has_edge(self, u: int, v: int) -> bool:
        self._check_vertex(u)
        self._check_vertex(v)
        lo, hi = self._indptr[u], self._indptr[u + 1]
        pos = np.searchsorted(self._indices[lo:hi], v)
        return bool(pos < hi - lo and self._indices[lo + pos] == v)

    def edges(self) -> Iterator[tuple[int, int]]:
        """Yields every edge once as (u, v) with u < v, lexicographically."""
        for u, nbrs in enumerate(self.adjacency):
            for w in nbrs:
                if w > u:
                    yield u, w

    def is_regular(self) -> bool:
        degs = self.degrees()
        return bool(len(degs) == 0 or (degs == degs[0]).all())

    def bfs_distances(self, source: int, limit: int | None = None) -> dict[int, int]:
        """Hop distances from ``source``, optionally truncated at ``limit``."""
        self._check_vertex(source)
        adjacency = self.adjacency
        dist = {source: 0}
        queue = deque([source])
        while queue:
            u = queue.popleft()
            du = dist[u]
            if limit is not None and du >= limit:
                continue
            for w in adjacency[u]:
                if w not in dist:
                    dist[w] = du + 1
                    queue.append(w)
        return dist

    def diameter(self) -> float | int:
        """Exact diameter via BFS from every vertex; ``DISCONNECTED`` if the
        graph has more than one component."""
        best = 0
        for v in range(self._n):
            dist = self.bfs_distances(v)
            if len(dist) < self._n:
                return DISCONNECTED
            best = max(best, max(dist.values()))
        return best

    def is_connected(self) -> bool:
        return self._n == 0 or len(self.bfs_distances(0)) == self._n

    def adjacency_matrix(self) -> np.ndarray:
        mat = np.zeros((self._n, self._n), dtype=np.int64)
        rows = np.repeat(np.arange(self._n), self.degrees())
        mat[rows, self._indices] = 1
        return mat

    # -- value semantics ---------------------------------------------------

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return (self._n == other._n
                and np.array_equal(self._indptr, other._indptr)
                and np.array_equal(self._indices, other._indices))

    def __hash__(self):
        return hash((self._n, self._indptr.tobytes(), self._indices.tobytes()))

    def __reduce__(self):
        return (_restore, (self._n, self._indptr, self._indices))

    def __repr__(self):
        return f"Graph(n={self._n}, m={self.m})"


def _restore(n, indptr, indices):
    return Graph(n, np.array(indptr), np.array(indices), validate=False)


def _check_csr(n, indptr, indices):
    if n < 0 or len(indptr) != n + 1 or indptr[0] != 0 or indptr[-1] != len(indices):
        raise InvalidParameterError("malformed CSR offsets")
    if np.any(np.diff(indptr) < 0):
        raise InvalidParameterError("CSR offsets must be non-decreasing")
    if len(indices) and (indices.min() < 0 or indices.max() >= n):
        raise VertexRangeError("neighbor index out of range")
    rows = np.repeat(np.arange(n), np.diff(indptr))
    if np.any(rows == indices):
        v = int(rows[rows == indices][0])
        raise SelfLoopError(f"self-loop on vertex {v}")
    for v in range(n):
        nbrs = indices[indptr[v]:indptr[v + 1]]
        if len(nbrs) > 1 and np.any(np.diff(nbrs) <= 0):
            raise InvalidParameterError(
                f"neighbor list of vertex {v} must be strictly ascending")
    forward = set(zip(rows.tolist(), indices.tolist()))
    if any((w, u) not in forward for u, w in forward):
        raise InvalidParameterError("adjacency is not symmetric")


def permute(graph: Graph, perm: Sequence[int]) -> Graph:
    """Relabels vertex v as perm[v]."""
    perm = list(perm)
    if sorted(perm) != list(range(graph.n)):
        raise InvalidParameterError("perm must be a permutation of 0..n-1")
    return Graph.from_edges(graph.n, ((perm[u], perm[w]) for u, w in graph.edges()))


def random_permutation(n: int, rng: np.random.Generator) -> list[int]:
    return rng.permutation(n).tolist()


def ego_network(graph: Graph, v: int, alpha: int) -> tuple[Graph, list[int]]:
    """Materializes the subgraph induced by every vertex within ``alpha`` hops
    of ``v``. Returns the subgraph (root relabeled to 0) and the list mapping
    local ids back to ``graph`` ids."""
    dist = graph.bfs_distances(v, limit=alpha)
    members = sorted(dist, key=lambda u: (dist[u], u))
    local = {u: i for i, u in enumerate(members)}
    adjacency = graph.adjacency
    edges = [(local[u], local[w]) for u in members for w in adjacency[u]
             if w in local and u < w]
    return Graph.from_edges(len(members), edges), members


@dataclass
class GraphCollection:
    """Ordered list of graphs read from one source."""

    graphs: list[Graph]
    labels: list[str] | None = None
    source: str = ""
    mappings: list[list[int]] | None = field(default=None, repr=False)

    def __post_init__(self):
        if self.labels is not None:
            if len(self.labels) != len(self.graphs):
                raise InvalidParameterError("one label per graph is required")
            if len(set(self.labels)) != len(self.labels):
                raise InvalidParameterError("graph labels must be unique")

    def __len__(self):
        return len(self.graphs)

    def __iter__(self):
        return iter(self.graphs)

    def __getitem__(self, i):
        return self.graphs[i]

    def max_degree(self) -> int:
        return max((g.max_degree() for g in self.graphs), default=0)
