"""graph6 reader/writer.

Format: a size field N(n) followed by ceil(n(n-1)/2 / 6) payload bytes. Each
byte holds 6 bits (value + 63), most significant bit first, and the bits list
the upper triangle of the adjacency matrix column by column:
x(0,1), x(0,2), x(1,2), x(0,3), ... Unused trailing bits must be zero.
"""

import numpy as np

from igelkit.core.errors import DirectedInputError, GraphFormatError
from igelkit.core.graph import Graph, GraphCollection

HEADER = ">>graph6<<"
_SMALL_MAX = 62
_MEDIUM_MAX = 258047


def _column_major_pairs(n):
    # tril_indices walks row by row; reading (row, col) as (j, i) gives the
    # graph6 order: j ascending, then i ascending.
    j, i = np.tril_indices(n, -1)
    return i, j


def _decode_size(data):
    if not data:
        raise GraphFormatError("empty graph6 record")
    first = data[0]
    if not 63 <= first <= 126:
        raise GraphFormatError(f"byte {first} outside [63, 126] in size field")
    if first != 126:
        return first - 63, 1
    if len(data) >= 2 and data[1] == 126:
        width, start = 6, 2
    else:
        width, start = 3, 1
    field = data[start:start + width]
    if len(field) < width:
        raise GraphFormatError("truncated graph6 size field")
    n = 0
    for byte in field:
        if not 63 <= byte <= 126:
            raise GraphFormatError(f"byte {byte} outside [63, 126] in size field")
        n = (n << 6) | (byte - 63)
    return n, start + width


def _encode_size(n):
    if n <= _SMALL_MAX:
        return bytes([n + 63])
    if n <= _MEDIUM_MAX:
        return b"~" + bytes(((n >> s) & 63) + 63 for s in (12, 6, 0))
    return b"~~" + bytes(((n >> s) & 63) + 63 for s in (30, 24, 18, 12, 6, 0))


def parse_graph6(line) -> Graph:
    """Decodes one graph6 record (str or bytes, surrounding whitespace ignored)."""
    # non-ASCII text maps to bytes above 126 and fails the range checks below
    try:
        data = line.encode("utf-8", "surrogateescape") if isinstance(line, str) else bytes(line)
    except UnicodeEncodeError as err:
        raise GraphFormatError(f"unencodable character {line[err.start]!r}") from err
    data = data.strip()
    if data.startswith(HEADER.encode()):
        data = data[len(HEADER):]
    if data.startswith(b"&") or data.startswith(b">>digraph6<<"):
        raise DirectedInputError("digraph6 input is directed; only undirected graph6 is supported")
    if data.startswith(b":") or data.startswith(b">>sparse6<<"):
        raise GraphFormatError("sparse6 records are not supported; convert to graph6")

    n, offset = _decode_size(data)
    payload = np.frombuffer(data[offset:], dtype=np.uint8)
    nbits = n * (n - 1) // 2
    expected = -(-nbits // 6)
    if len(payload) < expected:
        raise GraphFormatError(
            f"truncated record: expected {expected} payload bytes, got {len(payload)}")
    if len(payload) > expected:
        raise GraphFormatError(
            f"trailing data: expected {expected} payload bytes, got {len(payload)}")
    if len(payload) and (payload.min() < 63 or payload.max() > 126):
        bad = int(payload[(payload < 63) | (payload > 126)][0])
        raise GraphFormatError(f"byte {bad} outside [63, 126]")

    values = (payload - 63).astype(np.uint8) << 2
    bits = np.unpackbits(values).reshape(-1, 8)[:, :6].ravel()
    if bits[nbits:].any():
        raise GraphFormatError("nonzero padding bits")
    i, j = _column_major_pairs(n)
    mask = bits[:nbits].astype(bool)
    return Graph.from_edges(n, zip(i[mask].tolist(), j[mask].tolist()))


def write_graph6(graph: Graph, header: bool = False) -> str:
    """Encodes ``graph`` as a graph6 record (no trailing newline)."""
    n = graph.n
    i, j = _column_major_pairs(n)
    bits = graph.adjacency_matrix()[i, j].astype(np.uint8)
    pad = (-len(bits)) % 6
    bits = np.concatenate([bits, np.zeros(pad, dtype=np.uint8)]).reshape(-1, 6)
    values = bits @ (1 << np.arange(5, -1, -1))
    body = bytes((values + 63).astype(np.uint8).tolist())
    prefix = HEADER.encode() if header else b""
    return (prefix + _encode_size(n) + body).decode("ascii")


def parse_graph6_collection(text, source: str = "") -> GraphCollection:
    """Parses one graph6 record per line; blank lines are skipped.

    The whole input is rejected on the first malformed line.
    """
    graphs = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        if not line.strip():
            continue
        try:
            graphs.append(parse_graph6(line))
        except GraphFormatError as err:
            raise type(err)(err.message, line=lineno, source=source or None) from err
    return GraphCollection(graphs=graphs, source=f"{source} (graph6)" if source else "graph6")
