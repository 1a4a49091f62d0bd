"""Distinguishability surveys over graph collections.

Every graph is encoded under one method, graphs are bucketed by the digest of
their canonical encoding, and each bucket is split again on the full bytes so
a digest collision can never merge two distinct encodings.
"""

import json
import logging
import time
from collections import Counter
from dataclasses import dataclass, field
from functools import partial
from itertools import combinations
from typing import Sequence

from igelkit.core.encoding import canonical_digest
from igelkit.core.errors import InvalidParameterError, OracleSizeError
from igelkit.core.gamma import encode_graph_gamma
from igelkit.core.graph import Graph
from igelkit.core.igel import check_alpha, check_alphas, encode_graph, encode_graph_concat
from igelkit.core.isomorphism import MAX_VERTICES, brute_force_isomorphic
from igelkit.core.workers import run_chunked
from igelkit.core.wl import wl_collection_signatures, wl_joint_refine

logger = logging.getLogger(__name__)

METHODS = ("wl", "igel", "igel_concat", "gamma")


@dataclass(frozen=True)
class EncoderSpec:
    method: str
    alpha: int | None = None
    alphas: tuple[int, ...] = ()
    wl_max_iters: int | None = None
    per_vertex: bool = True

    def __post_init__(self):
        if self.method not in METHODS:
            raise InvalidParameterError(f"unknown method {self.method!r}; expected one of {METHODS}")
        if self.method in ("igel", "gamma"):
            check_alpha(self.alpha)
        elif self.method == "igel_concat":
            check_alphas(self.alphas)
        elif self.wl_max_iters is not None and self.wl_max_iters < 0:
            raise InvalidParameterError(f"wl_max_iters must be >= 0, got {self.wl_max_iters}")

    @classmethod
    def parse(cls, method: str, alpha_text: str | None = None, wl_max_iters=None,
              per_vertex=True) -> "EncoderSpec":
        """Builds a spec from command-line text; "1,2" under igel selects the
        concatenated encoding."""
        if method == "wl":
            return cls("wl", wl_max_iters=wl_max_iters)
        try:
            alphas = tuple(int(a) for a in (alpha_text or "").split(",") if a.strip())
        except ValueError:
            raise InvalidParameterError(f"invalid alpha list {alpha_text!r}") from None
        if method == "igel" and len(alphas) > 1:
            method = "igel_concat"
        if method == "igel_concat":
            return cls("igel_concat", alphas=alphas, per_vertex=per_vertex)
        if len(alphas) != 1:
            raise InvalidParameterError(f"method {method!r} takes exactly one alpha")
        return cls(method, alpha=alphas[0])

    def describe_alpha(self):
        if self.method == "igel_concat":
            return list(self.alphas)
        return self.alpha


def encode_canonical(graph: Graph, spec: EncoderSpec):
    """Canonical graph-level encoding under an igel-family spec."""
    if spec.method == "igel":
        return encode_graph(graph, spec.alpha)
    if spec.method == "gamma":
        return encode_graph_gamma(graph, spec.alpha)
    if spec.method == "igel_concat":
        return encode_graph_concat(graph, spec.alphas, per_vertex=spec.per_vertex)
    raise InvalidParameterError("wl signatures are computed per collection")


def _encode_chunk(spec, graphs):
    return [encode_canonical(g, spec).canonical for g in graphs]


@dataclass
class SurveyReport:
    collection: str
    spec: EncoderSpec
    graphs: int
    buckets: list[list[int]]
    verified_isomorphic_pairs: int | None = None
    elapsed: float = 0.0
    known_non_isomorphic: bool = False
    digests: dict[int, str] = field(default_factory=dict, repr=False)

    @property
    def indistinguishable_pairs(self) -> int:
        return sum(len(b) * (len(b) - 1) // 2 for b in self.buckets)

    def collisions(self) -> list[list[int]]:
        return [b for b in self.buckets if len(b) > 1]

    def to_dict(self, detail=False) -> dict:
        summary = {
            "collection": self.collection,
            "method": self.spec.method,
            "alpha": self.spec.describe_alpha(),
            "graphs": self.graphs,
            "buckets": len(self.buckets),
            "indistinguishable_pairs": self.indistinguishable_pairs,
            "verified_isomorphic_pairs": self.verified_isomorphic_pairs,
            "elapsed_ms": round(self.elapsed * 1000, 3),
        }
        if self.known_non_isomorphic:
            # every colliding pair in a non-isomorphic collection is a miss
            summary["errors"] = self.indistinguishable_pairs
        if detail:
            summary["collisions"] = [
                {"hash": self.digests.get(b[0], ""), "graphs": b} for b in self.collisions()]
        return summary

    def to_json(self, detail=False) -> str:
        return json.dumps(self.to_dict(detail), sort_keys=False)


def _bucket(canonicals: Sequence[bytes]):
    by_digest = {}
    for index, blob in enumerate(canonicals):
        digest = canonical_digest(blob).hex()
        exact = by_digest.setdefault(digest, {})
        exact.setdefault(blob, []).append(index)
    buckets, digests = [], {}
    for digest, exact in by_digest.items():
        if len(exact) > 1:
            logger.warning("digest collision on %s between %d distinct encodings", digest, len(exact))
        for members in exact.values():
            buckets.append(members)
            digests[members[0]] = digest
    buckets.sort(key=lambda b: b[0])
    return buckets, digests


def run_survey(collection, spec: EncoderSpec, verify=False, workers=1, chunk_size=256,
               progress=False, log_callback=None, known_non_isomorphic=False) -> SurveyReport:
    """Buckets the graphs of ``collection`` by their encodings under ``spec``."""
    graphs = list(collection)
    if not graphs:
        raise InvalidParameterError("cannot survey an empty collection")
    source = getattr(collection, "source", "") or "<memory>"
    if verify:
        too_big = [i for i, g in enumerate(graphs) if g.n > MAX_VERTICES]
        if too_big:
            shown = ", ".join(map(str, too_big[:20]))
            raise OracleSizeError(
                f"--verify needs graphs with at most {MAX_VERTICES} vertices; "
                f"{len(too_big)} graph(s) exceed it: {shown}", offending=too_big)

    started = time.perf_counter()
    if spec.method == "wl":
        canonicals = wl_collection_signatures(graphs, spec.wl_max_iters)
    else:
        canonicals = run_chunked(partial(_encode_chunk, spec), graphs, workers=workers,
                                 chunk_size=chunk_size, progress=progress,
                                 log_callback=log_callback, description=spec.method)
    buckets, digests = _bucket(canonicals)

    verified = None
    if verify:
        pairs = [pair for b in buckets if len(b) > 1 for pair in combinations(b, 2)]
        flags = run_chunked(partial(_verify_chunk, graphs), pairs, workers=workers,
                            chunk_size=chunk_size, progress=progress,
                            log_callback=log_callback, description="verify")
        verified = sum(flags)

    report = SurveyReport(
        collection=source,
        spec=spec,
        graphs=len(graphs),
        buckets=buckets,
        verified_isomorphic_pairs=verified,
        elapsed=time.perf_counter() - started,
        known_non_isomorphic=known_non_isomorphic,
        digests=digests,
    )
    logger.info("survey %s on %s: %d bucket(s), %d indistinguishable pair(s)",
                spec.method, source, len(buckets), report.indistinguishable_pairs)
    return report


def _verify_chunk(graphs, pairs):
    return [brute_force_isomorphic(graphs[a], graphs[b]) for a, b in pairs]


@dataclass(frozen=True)
class Witness:
    """A multiset entry whose multiplicity differs between two encodings.

    ``level`` is "entry" for a (distance, degree...) key summed over all
    vertices, "vertex" for a whole vertex encoding.
    """

    level: str
    entry: tuple
    count_a: int
    count_b: int
    alpha: int | None = None


@dataclass(frozen=True)
class Comparison:
    distinguished: bool
    method: str
    distinguished_at: int | None = None
    witness: Witness | None = None

    @property
    def verdict(self) -> str:
        return "distinguished" if self.distinguished else "equivalent"


def find_witness(enc_a, enc_b) -> Witness | None:
    """First differing entry between two graph encodings of the same kind."""
    totals_a, totals_b = enc_a.entry_totals(), enc_b.entry_totals()
    for key in sorted(set(totals_a) | set(totals_b)):
        if totals_a[key] != totals_b[key]:
            return Witness("entry", key, totals_a[key], totals_b[key], enc_a.alpha)
    counts_a, counts_b = Counter(enc_a.vertex_bytes), Counter(enc_b.vertex_bytes)
    lookup = dict(zip(enc_a.vertex_bytes, enc_a.vertices))
    lookup.update(zip(enc_b.vertex_bytes, enc_b.vertices))
    for blob in sorted(set(counts_a) | set(counts_b)):
        if counts_a[blob] != counts_b[blob]:
            return Witness("vertex", lookup[blob].entries, counts_a[blob], counts_b[blob],
                           enc_a.alpha)
    return None


def pairwise_compare(g1: Graph, g2: Graph, spec: EncoderSpec) -> Comparison:
    if spec.method == "wl":
        _, _, at = wl_joint_refine(g1, g2, spec.wl_max_iters)
        return Comparison(at is not None, "wl", distinguished_at=at)

    enc_a, enc_b = encode_canonical(g1, spec), encode_canonical(g2, spec)
    if enc_a == enc_b:
        return Comparison(False, spec.method)
    if spec.method == "igel_concat":
        witness = None
        for part_a, part_b in zip(enc_a.parts, enc_b.parts):
            witness = find_witness(part_a, part_b)
            if witness is not None:
                break
        if witness is None:
            # components agree; only the pairing of depths per vertex differs
            rows_a, rows_b = Counter(enc_a.vertex_rows), Counter(enc_b.vertex_rows)
            row = next(r for r in sorted(set(rows_a) | set(rows_b)) if rows_a[r] != rows_b[r])
            witness = Witness("vertex", tuple(b.hex() for b in row), rows_a[row], rows_b[row])
        return Comparison(True, spec.method, witness=witness)
    return Comparison(True, spec.method, witness=find_witness(enc_a, enc_b))
