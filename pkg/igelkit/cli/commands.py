"""Subcommand implementations. Each returns a process exit code."""

import json
import logging
import sys
from contextlib import contextmanager

from igelkit.core import families
from igelkit.core.errors import InvalidParameterError
from igelkit.core.gamma import gamma_encode_all, vectorize_gamma
from igelkit.core.graph import GraphCollection
from igelkit.core.igel import check_alphas, igel_encode_all, vectorize, vectorize_concat
from igelkit.core.parsers import detect_format, format_graph, read_graphs
from igelkit.core.survey import EncoderSpec, pairwise_compare, run_survey
from igelkit.core.wl import wl_refine
from igelkit.utils.features import format_header, write_feature_blocks

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_DATA = 2
EXIT_EQUIVALENT = 3


class UsageError(Exception):
    pass


# name -> (generator, number of integer parameters)
FAMILIES = {
    "cycle": (families.gen_cycle, 1),
    "complete": (families.gen_complete, 1),
    "star": (families.gen_star, 1),
    "path": (families.gen_path, 1),
    "empty": (families.gen_empty, 1),
    "rook": (families.gen_rook, 1),
    "shrikhande": (families.gen_shrikhande, 0),
    "petersen": (families.gen_petersen, 0),
    "paley": (families.gen_paley, 1),
    "random-regular": (families.gen_random_regular, 2),
    "complete-bipartite": (families.gen_complete_bipartite, 2),
    "prism": (families.gen_prism, 1),
}


def generate(family, params, seed=None):
    if family not in FAMILIES:
        raise UsageError(f"unknown family {family!r}; choose from {', '.join(sorted(FAMILIES))}")
    func, arity = FAMILIES[family]
    if len(params) != arity:
        raise UsageError(f"family {family!r} takes {arity} integer parameter(s), got {len(params)}")
    if family == "random-regular":
        return func(*params, seed=seed)
    return func(*params)


def load_input(spec, fmt=None, zero_indexed=True):
    """Loads a file, or generates a fixture for ``@family[:p1[:p2]]``."""
    if spec.startswith("@"):
        name, *raw = spec[1:].split(":")
        try:
            params = [int(p) for p in raw]
        except ValueError:
            raise UsageError(f"non-integer parameter in {spec!r}") from None
        return GraphCollection(graphs=[generate(name, params)], source=spec)
    return read_graphs(spec, fmt=fmt, zero_indexed=zero_indexed)


def resolve_format(args):
    """Validates format-specific flags before any work starts."""
    index_flag = args.zero_indexed or args.one_indexed
    for path in args.inputs:
        fmt = args.format or (None if path.startswith("@") else detect_format(path))
        if fmt == "g6" and index_flag:
            raise UsageError("--zero-indexed/--one-indexed only apply to edge-list input")
    return args.format


@contextmanager
def open_output(path):
    if path in (None, "-"):
        yield sys.stdout
    else:
        with open(path, "w", encoding="utf-8", newline="\n") as f:
            yield f


def _parse_alphas(text):
    try:
        alphas = [int(a) for a in str(text).split(",") if a.strip()]
    except ValueError:
        raise UsageError(f"invalid --alpha {text!r}") from None
    try:
        return check_alphas(alphas)
    except InvalidParameterError as err:
        raise UsageError(str(err)) from None


def _parse_dcap(text):
    if text == "auto":
        return None
    try:
        value = int(text)
    except ValueError:
        raise UsageError(f"--dcap must be 'auto' or an integer, got {text!r}") from None
    if value < 1:
        raise UsageError(f"--dcap must be >= 1, got {value}")
    return value


def cmd_encode(args, config):
    fmt = resolve_format(args)
    alphas = _parse_alphas(args.alpha)
    fixed_dcap = _parse_dcap(str(args.dcap))
    if fixed_dcap is not None and args.per_graph_dcap:
        raise UsageError("--per-graph-dcap cannot be combined with an integer --dcap")
    zero_indexed = not args.one_indexed

    collections = [load_input(p, fmt, zero_indexed) for p in args.inputs]
    graphs = [g for c in collections for g in c.graphs]
    mappings = []
    for c in collections:
        mappings.extend(c.mappings or [None] * len(c))

    if fixed_dcap is not None:
        caps = [fixed_dcap] * len(graphs)
        header_cap = str(fixed_dcap)
    elif args.per_graph_dcap:
        caps = [max(1, g.max_degree()) for g in graphs]
        header_cap = "per-graph"
    else:
        cap = max(1, max((g.max_degree() for g in graphs), default=0))
        caps = [cap] * len(graphs)
        header_cap = str(cap)
        print(f"dcap={cap}", file=sys.stderr)

    encode_all, to_vector = igel_encode_all, vectorize
    if args.method == "gamma":
        encode_all, to_vector = gamma_encode_all, vectorize_gamma

    blocks, markers = [], []
    for index, (graph, cap) in enumerate(zip(graphs, caps)):
        per_alpha = [encode_all(graph, a, workers=args.threads, progress=args.progress)
                     for a in alphas]
        rows = []
        for v in range(graph.n):
            vectors = [to_vector(encs[v], cap) for encs in per_alpha]
            rows.append((v, vectors[0] if len(vectors) == 1 else vectorize_concat(vectors)))
        blocks.append(rows)
        markers.append(f"dcap={cap}" if args.per_graph_dcap else "")
        logger.info("encoded graph %d: n=%d m=%d", index, graph.n, graph.m)

    with open_output(args.out) as out:
        write_feature_blocks(out, format_header(header_cap, alphas, args.method), blocks, markers)

    if args.mapping_out:
        with open(args.mapping_out, "w", encoding="utf-8", newline="\n") as f:
            for index, ids in enumerate(mappings):
                if ids is None:
                    continue
                if len(mappings) > 1:
                    f.write(f"# graph {index}\n")
                f.writelines(f"{dense} {original}\n" for dense, original in enumerate(ids))
    return EXIT_OK


def _spec_from_args(args):
    method = args.method
    try:
        return EncoderSpec.parse(method, None if method == "wl" else str(args.alpha),
                                 wl_max_iters=args.wl_max_iters,
                                 per_vertex=not getattr(args, "component_concat", False))
    except InvalidParameterError as err:
        raise UsageError(str(err)) from None


def cmd_survey(args, config):
    spec = _spec_from_args(args)
    collection = load_input(args.input, args.format)
    report = run_survey(collection, spec, verify=args.verify, workers=args.threads,
                        chunk_size=config.get("chunk_size", 256), progress=args.progress,
                        known_non_isomorphic=args.non_isomorphic)
    with open_output(args.json) as out:
        out.write(report.to_json(detail=args.detail) + "\n")
    return EXIT_OK


def _single_graph(spec, fmt, index):
    collection = load_input(spec, fmt)
    if not 0 <= index < len(collection):
        raise InvalidParameterError(
            f"{spec}: graph index {index} out of range ({len(collection)} graph(s))")
    return collection[index]


def cmd_compare(args, config):
    spec = _spec_from_args(args)
    g1 = _single_graph(args.a, args.format, args.index_a)
    g2 = _single_graph(args.b, args.format, args.index_b)
    result = pairwise_compare(g1, g2, spec)
    parts = [result.verdict, f"method={spec.method}"]
    if spec.method != "wl":
        alpha = spec.describe_alpha()
        parts.append("alpha=" + (",".join(map(str, alpha)) if isinstance(alpha, list) else str(alpha)))
    if result.distinguished_at is not None:
        parts.append(f"distinguished_at={result.distinguished_at}")
    if result.witness is not None:
        w = result.witness
        parts.append(f"witness={w.level}:{tuple(w.entry)} a={w.count_a} b={w.count_b}")
    print(" ".join(parts))
    return EXIT_OK if result.distinguished else EXIT_EQUIVALENT


def cmd_gen(args, config):
    graph = generate(args.family, args.params, seed=args.seed)
    with open_output(args.out) as out:
        out.write(format_graph(graph, args.out_format))
    logger.info("generated %s: n=%d m=%d", args.family, graph.n, graph.m)
    return EXIT_OK


def cmd_refine(args, config):
    collection = load_input(args.input, args.format)
    with open_output(args.out) as out:
        for index, graph in enumerate(collection):
            coloring = wl_refine(graph, args.max_iters)
            record = {
                "graph": index,
                "n": graph.n,
                "iterations": coloring.iterations,
                "classes": coloring.num_classes,
                "histogram": {str(c): k for c, k in coloring.histogram},
            }
            out.write(json.dumps(record) + "\n")
    return EXIT_OK
