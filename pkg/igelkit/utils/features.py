"""SVMlight-style sparse feature files.

One line per vertex, ``<vertex_id> <index>:<value> ...`` with ascending
indices. Comment lines start with ``#``.
"""


def format_header(d_cap, alphas, method):
    alpha = ",".join(str(a) for a in alphas)
    return f"# dcap={d_cap} alpha={alpha} method={method}"


def format_feature_line(vertex_id, vector):
    body = vector.to_svmlight()
    return f"{vertex_id} {body}" if body else str(vertex_id)


def write_feature_blocks(out, header, blocks, markers=None):
    """Writes ``header`` then one block per graph.

    ``blocks`` is a list of per-graph lists of (vertex id, SparseVector).
    With several graphs each block gets a ``# graph <i>`` marker and blocks
    are separated by a blank line. ``markers`` optionally appends text to a
    block's marker line, which forces the marker even for a single graph.
    """
    out.write(header + "\n")
    markers = markers or [""] * len(blocks)
    multi = len(blocks) > 1
    for index, (rows, extra) in enumerate(zip(blocks, markers)):
        if index:
            out.write("\n")
        if multi or extra:
            out.write(f"# graph {index} {extra}".rstrip() + "\n")
        for vertex_id, vector in rows:
            out.write(format_feature_line(vertex_id, vector) + "\n")


def parse_feature_line(line):
    """Inverse of ``format_feature_line``: (vertex id, {index: value})."""
    tokens = line.split()
    features = {}
    for token in tokens[1:]:
        index, value = token.split(":", 1)
        features[int(index)] = int(value)
    return int(tokens[0]), features
