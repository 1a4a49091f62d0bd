"""Deterministic generators for the graph families used as fixtures, and a
strongly-regular parameter checker."""

import itertools
import logging
from dataclasses import dataclass

import numpy as np

from igelkit.core.errors import GenerationError, InvalidParameterError
from igelkit.core.graph import Graph

logger = logging.getLogger(__name__)


def _require(condition, message):
    if not condition:
        raise InvalidParameterError(message)


def gen_empty(n: int) -> Graph:
    _require(n >= 0, f"empty graph needs n >= 0, got {n}")
    return Graph.from_edges(n, [])


def gen_cycle(n: int) -> Graph:
    _require(n >= 3, f"cycle needs n >= 3, got {n}")
    return Graph.from_edges(n, ((i, (i + 1) % n) for i in range(n)))


def gen_path(n: int) -> Graph:
    _require(n >= 1, f"path needs n >= 1, got {n}")
    return Graph.from_edges(n, ((i, i + 1) for i in range(n - 1)))


def gen_complete(n: int) -> Graph:
    _require(n >= 1, f"complete graph needs n >= 1, got {n}")
    return Graph.from_edges(n, itertools.combinations(range(n), 2))


def gen_star(k: int) -> Graph:
    """K_{1,k}: center 0 joined to leaves 1..k."""
    _require(k >= 1, f"star needs at least one leaf, got {k}")
    return Graph.from_edges(k + 1, ((0, i) for i in range(1, k + 1)))


def gen_complete_bipartite(a: int, b: int) -> Graph:
    _require(a >= 1 and b >= 1, f"complete bipartite needs both sides >= 1, got {a}, {b}")
    return Graph.from_edges(a + b, ((i, a + j) for i in range(a) for j in range(b)))


def gen_prism(k: int) -> Graph:
    """C_k x K_2: two k-cycles with matching vertices joined."""
    _require(k >= 3, f"prism needs k >= 3, got {k}")
    edges = [(i, (i + 1) % k) for i in range(k)]
    edges += [(k + i, k + (i + 1) % k) for i in range(k)]
    edges += [(i, k + i) for i in range(k)]
    return Graph.from_edges(2 * k, edges)


def gen_disjoint_union(g1: Graph, g2: Graph) -> Graph:
    shift = g1.n
    edges = list(g1.edges()) + [(u + shift, v + shift) for u, v in g2.edges()]
    return Graph.from_edges(g1.n + g2.n, edges)


def gen_random_graph(n: int, p: float, seed=None) -> Graph:
    """Erdos-Renyi G(n, p)."""
    _require(n >= 0, f"n must be >= 0, got {n}")
    _require(0.0 <= p <= 1.0, f"p must be in [0, 1], got {p}")
    rng = np.random.default_rng(seed)
    i, j = np.triu_indices(n, 1)
    keep = rng.random(len(i)) < p
    return Graph.from_edges(n, zip(i[keep].tolist(), j[keep].tolist()))


def gen_random_regular(n: int, d: int, seed=None, max_restarts: int = 1000) -> Graph:
    """Simple d-regular graph from the pairing model, restarting whenever the
    pairing produces a loop or a repeated edge."""
    _require(n >= 1 and d >= 0, f"need n >= 1 and d >= 0, got n={n}, d={d}")
    _require(d < n, f"degree {d} must be below n={n}")
    _require((n * d) % 2 == 0, f"n*d must be even, got n={n}, d={d}")
    rng = np.random.default_rng(seed)
    points = np.repeat(np.arange(n), d)
    for attempt in range(max_restarts):
        pairs = rng.permutation(points).reshape(-1, 2)
        if np.any(pairs[:, 0] == pairs[:, 1]):
            continue
        lo = np.minimum(pairs[:, 0], pairs[:, 1])
        hi = np.maximum(pairs[:, 0], pairs[:, 1])
        keys = lo * n + hi
        if len(np.unique(keys)) != len(keys):
            continue
        logger.debug("random %d-regular graph on %d vertices after %d restart(s)", d, n, attempt)
        return Graph.from_edges(n, zip(lo.tolist(), hi.tolist()))
    raise GenerationError(f"no simple {d}-regular graph on {n} vertices after {max_restarts} restarts")


def gen_rook(k: int) -> Graph:
    """k x k rook's graph: cells sharing a row or a column are adjacent."""
    _require(k >= 2, f"rook graph needs k >= 2, got {k}")
    cells = [(r, c) for r in range(k) for c in range(k)]
    return Graph.from_edges(k * k, (
        (a, b) for a, b in itertools.combinations(range(k * k), 2)
        if cells[a][0] == cells[b][0] or cells[a][1] == cells[b][1]))


def gen_shrikhande() -> Graph:
    """Cayley graph on Z4 x Z4 with connection set {+-(1,0), +-(0,1), +-(1,1)}."""
    shifts = {(1, 0), (3, 0), (0, 1), (0, 3), (1, 1), (3, 3)}
    cells = [(a, b) for a in range(4) for b in range(4)]
    return Graph.from_edges(16, (
        (x, y) for x, y in itertools.combinations(range(16), 2)
        if ((cells[y][0] - cells[x][0]) % 4, (cells[y][1] - cells[x][1]) % 4) in shifts))


def gen_petersen() -> Graph:
    """Kneser graph K(5, 2): 2-subsets of {0..4}, adjacent when disjoint."""
    subsets = list(itertools.combinations(range(5), 2))
    return Graph.from_edges(10, (
        (a, b) for a, b in itertools.combinations(range(10), 2)
        if not set(subsets[a]) & set(subsets[b])))


def _is_prime(q):
    return q >= 2 and all(q % f for f in range(2, int(q ** 0.5) + 1))


def gen_paley(q: int) -> Graph:
    """Paley graph on Z_q, prime q = 1 (mod 4): adjacent when the difference
    is a nonzero quadratic residue."""
    _require(_is_prime(q) and q % 4 == 1, f"Paley graph needs a prime q = 1 (mod 4), got {q}")
    residues = {(x * x) % q for x in range(1, q)}
    return Graph.from_edges(q, (
        (a, b) for a, b in itertools.combinations(range(q), 2) if (b - a) % q in residues))


@dataclass(frozen=True)
class SrgParams:
    n: int
    d: int
    beta: int
    gamma: int
    beta_vacuous: bool = False
    gamma_vacuous: bool = False

    def as_tuple(self) -> tuple[int, int, int, int]:
        return self.n, self.d, self.beta, self.gamma

    def is_feasible(self) -> bool:
        """d(d - beta - 1) = (n - d - 1) gamma."""
        return self.d * (self.d - self.beta - 1) == (self.n - self.d - 1) * self.gamma


def srg_params(graph: Graph) -> SrgParams | None:
    """Returns the SRG parameters of ``graph`` or None if it is not strongly
    regular. Parameters that no vertex pair witnesses are reported as 0 and
    flagged vacuous."""
    if graph.n == 0 or not graph.is_regular():
        return None
    adj = graph.adjacency_matrix()
    common = adj @ adj
    off_diagonal = ~np.eye(graph.n, dtype=bool)
    adjacent = common[(adj == 1) & off_diagonal]
    distant = common[(adj == 0) & off_diagonal]
    if len(np.unique(adjacent)) > 1 or len(np.unique(distant)) > 1:
        return None
    return SrgParams(
        n=graph.n,
        d=graph.max_degree(),
        beta=int(adjacent[0]) if len(adjacent) else 0,
        gamma=int(distant[0]) if len(distant) else 0,
        beta_vacuous=len(adjacent) == 0,
        gamma_vacuous=len(distant) == 0,
    )
