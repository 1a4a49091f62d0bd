"""Value types shared by the plain and gamma encoders: multiset vertex
encodings, sparse vectors and canonical graph-level encodings."""

import hashlib
from collections import Counter
from dataclasses import dataclass
from typing import ClassVar, Iterable, Sequence

import numpy as np

DIGEST_SIZE = 16


@dataclass(frozen=True)
class MultisetEncoding:
    """A multiset of integer tuples. ``entries`` holds ``(*key, count)`` rows
    sorted by key; ``key_width`` is fixed per subclass."""

    alpha: int
    entries: tuple[tuple[int, ...], ...]
    key_width: ClassVar[int] = 0
    method: ClassVar[str] = ""

    @classmethod
    def from_counter(cls, alpha: int, counts: Counter):
        return cls(alpha, tuple((*key, count) for key, count in sorted(counts.items())))

    def counter(self) -> Counter:
        return Counter({row[:-1]: row[-1] for row in self.entries})

    def as_dict(self) -> dict:
        return {row[:-1]: row[-1] for row in self.entries}

    @property
    def size(self) -> int:
        """Number of vertices in the encoded ego-network."""
        return sum(row[-1] for row in self.entries)

    def to_bytes(self) -> bytes:
        # 64-bit little-endian: entry count, then key..., count per entry.
        flat = [len(self.entries)] + [x for row in self.entries for x in row]
        return np.asarray(flat, dtype="<u8").tobytes()

    def __str__(self):
        inner = ", ".join(f"{tuple(row[:-1])}: {row[-1]}" for row in self.entries)
        return "{" + inner + "}"


@dataclass(frozen=True)
class VertexEncoding(MultisetEncoding):
    """(distance, ego-network degree) -> count."""

    key_width: ClassVar[int] = 2
    method: ClassVar[str] = "igel"


@dataclass(frozen=True)
class GammaVertexEncoding(MultisetEncoding):
    """(distance, same-layer degree, outward-layer degree) -> count."""

    key_width: ClassVar[int] = 3
    method: ClassVar[str] = "gamma"


@dataclass(frozen=True)
class SparseVector:
    dim: int
    d_cap: int
    entries: tuple[tuple[int, int], ...]

    def to_dense(self) -> np.ndarray:
        dense = np.zeros(self.dim, dtype=np.int64)
        for index, value in self.entries:
            dense[index] = value
        return dense

    def to_svmlight(self) -> str:
        return " ".join(f"{i}:{v}" for i, v in self.entries)


def sparse_from_counts(dim: int, d_cap: int, counts: Counter) -> SparseVector:
    return SparseVector(dim, d_cap, tuple(sorted((i, v) for i, v in counts.items() if v > 0)))


def canonical_digest(blob: bytes) -> bytes:
    return hashlib.blake2b(blob, digest_size=DIGEST_SIZE).digest()


def _length_prefixed(blobs: Iterable[bytes]) -> bytes:
    out = bytearray()
    for blob in blobs:
        out += len(blob).to_bytes(8, "little")
        out += blob
    return bytes(out)


class CanonicalEncoding:
    """Order-independent graph encoding compared by its canonical bytes."""

    @property
    def canonical(self) -> bytes:
        raise NotImplementedError

    def digest(self) -> bytes:
        return canonical_digest(self.canonical)

    def hexdigest(self) -> str:
        return self.digest().hex()

    def __eq__(self, other):
        if not isinstance(other, CanonicalEncoding):
            return NotImplemented
        return self.canonical == other.canonical

    def __hash__(self):
        return hash(self.canonical)


class GraphEncoding(CanonicalEncoding):
    """Sorted multiset of a graph's vertex encodings."""

    def __init__(self, alpha: int, vertices: Sequence[MultisetEncoding], method: str = "igel"):
        self.alpha = alpha
        self.method = method
        keyed = sorted(((enc.to_bytes(), enc) for enc in vertices), key=lambda pair: pair[0])
        self.vertex_bytes = tuple(b for b, _ in keyed)
        self.vertices = tuple(enc for _, enc in keyed)
        self._canonical = None

    @property
    def n(self) -> int:
        return len(self.vertices)

    @property
    def canonical(self) -> bytes:
        if self._canonical is None:
            head = self.method.encode("ascii") + b"\0"
            head += np.asarray([self.alpha, self.n], dtype="<u8").tobytes()
            self._canonical = head + _length_prefixed(self.vertex_bytes)
        return self._canonical

    def entry_totals(self) -> Counter:
        """Multiplicity of every key summed over all vertices."""
        totals = Counter()
        for enc in self.vertices:
            totals.update(enc.counter())
        return totals

    def __repr__(self):
        return f"GraphEncoding(method={self.method!r}, alpha={self.alpha}, n={self.n})"


class ConcatEncoding(CanonicalEncoding):
    """Encodings of one graph at several depths.

    In per-vertex mode each vertex contributes the tuple of its per-depth
    encodings and the graph is the sorted multiset of those tuples. In
    component mode the graph is the tuple of its per-depth graph encodings.
    Per-vertex equality implies component equality.
    """

    def __init__(self, parts: Sequence[GraphEncoding], per_vertex_rows=None):
        self.parts = tuple(parts)
        self.alphas = tuple(p.alpha for p in self.parts)
        self.per_vertex = per_vertex_rows is not None
        self.vertex_rows = tuple(sorted(per_vertex_rows)) if self.per_vertex else ()
        self._canonical = None

    @property
    def canonical(self) -> bytes:
        if self._canonical is None:
            head = b"concat\0" + np.asarray([int(self.per_vertex), *self.alphas],
                                            dtype="<u8").tobytes()
            if self.per_vertex:
                body = _length_prefixed(_length_prefixed(row) for row in self.vertex_rows)
            else:
                body = _length_prefixed(p.canonical for p in self.parts)
            self._canonical = head + body
        return self._canonical

    def __repr__(self):
        mode = "vertex" if self.per_vertex else "component"
        return f"ConcatEncoding(alphas={self.alphas}, mode={mode})"
