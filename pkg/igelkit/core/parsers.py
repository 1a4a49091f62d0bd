"""Edge-list ingestion and file front ends for both input formats."""

import logging
import os
import re

from igelkit.core.errors import GraphFormatError, SelfLoopError
from igelkit.core.graph import Graph, GraphCollection
from igelkit.core.graph6 import parse_graph6_collection, write_graph6

logger = logging.getLogger(__name__)

FORMATS = ("edgelist", "g6")
_DECLARED_N = re.compile(r"^#\s*n\s*=\s*(\d+)\s*$")


def parse_edge_list_indexed(text, zero_indexed=True, num_vertices=None):
    """Parses ``u v`` lines into a graph.

    Returns ``(graph, original_ids)`` where ``original_ids[i]`` is the input id
    of dense vertex ``i``. With a declared vertex count (``num_vertices`` or a
    ``# n=<N>`` header line) ids are kept as they are and must fall in range;
    otherwise the distinct ids seen are re-indexed densely in ascending order.
    """
    base = 0 if zero_indexed else 1
    declared = num_vertices
    edges = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        if isinstance(raw, bytes):
            try:
                raw = raw.decode("utf-8")
            except UnicodeDecodeError:
                raise GraphFormatError(
                    "line is not valid UTF-8", line=lineno) from None
        line = raw.strip()
        if not line:
            continue
        if line.startswith("#"):
            match = _DECLARED_N.match(line)
            if match and num_vertices is None:
                declared = int(match.group(1))
            continue
        tokens = line.split("#", 1)[0].split()
        if len(tokens) != 2:
            raise GraphFormatError(
                f"expected two vertex ids, got {len(tokens)} tokens", line=lineno)
        try:
            u, v = (int(t) - base for t in tokens)
        except ValueError:
            raise GraphFormatError(f"non-integer vertex id in {line!r}", line=lineno) from None
        if u < 0 or v < 0:
            raise GraphFormatError(
                f"vertex id below {base} in {line!r}", line=lineno)
        if u == v:
            raise SelfLoopError(f"self-loop on vertex {u + base}", line=lineno)
        if declared is not None and (u >= declared or v >= declared):
            raise GraphFormatError(
                f"vertex id out of declared range n={declared} in {line!r}", line=lineno)
        edges.append((u, v))

    if declared is not None:
        return Graph.from_edges(declared, edges), [i + base for i in range(declared)]

    ids = sorted({u for e in edges for u in e})
    dense = {old: new for new, old in enumerate(ids)}
    if ids and ids[-1] != len(ids) - 1:
        logger.info("re-indexed %d sparse vertex ids to 0..%d", len(ids), len(ids) - 1)
    graph = Graph.from_edges(len(ids), ((dense[u], dense[v]) for u, v in edges))
    return graph, [i + base for i in ids]


def parse_edge_list(text, zero_indexed=True, num_vertices=None) -> Graph:
    return parse_edge_list_indexed(text, zero_indexed, num_vertices)[0]


def write_edge_list(graph: Graph) -> str:
    lines = [f"# n={graph.n}"]
    lines.extend(f"{u} {v}" for u, v in graph.edges())
    return "\n".join(lines) + "\n"


def detect_format(path):
    _, ext = os.path.splitext(path)
    return "g6" if ext.lower() in (".g6", ".graph6") else "edgelist"


def read_graphs(path, fmt=None, zero_indexed=True) -> GraphCollection:
    """Loads a file into a collection: one graph for edge lists, one per line
    for graph6. Parse errors carry the file path."""
    fmt = fmt or detect_format(path)
    if fmt not in FORMATS:
        raise GraphFormatError(f"unknown format {fmt!r}; expected one of {FORMATS}")
    with open(path, "rb") as f:
        text = f.read()
    try:
        if fmt == "g6":
            collection = parse_graph6_collection(text, source=path)
        else:
            graph, ids = parse_edge_list_indexed(text, zero_indexed=zero_indexed)
            collection = GraphCollection(graphs=[graph], source=f"{path} (edgelist)",
                                         mappings=[ids])
    except GraphFormatError as err:
        raise err.with_source(path) from err
    logger.info("loaded %d graph(s) from %s", len(collection), path)
    return collection


def format_graph(graph: Graph, fmt: str) -> str:
    if fmt == "g6":
        return write_graph6(graph) + "\n"
    if fmt == "edgelist":
        return write_edge_list(graph)
    raise GraphFormatError(f"unknown format {fmt!r}; expected one of {FORMATS}")
