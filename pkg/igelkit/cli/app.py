import argparse
import logging
import sys

from igelkit import __version__
from igelkit.cli import commands
from igelkit.cli.commands import EXIT_DATA, EXIT_USAGE, UsageError
from igelkit.core.config import ConfigManager
from igelkit.core.errors import IgelError
from igelkit.utils.log import configure_logging, level_for_verbosity

logger = logging.getLogger(__name__)

EPILOG = """\
exit codes:
  0  success (compare: graphs distinguished)
  1  usage error
  2  data error (unreadable or malformed input, invalid parameters)
  3  compare: graphs equivalent under the chosen method

environment:
  IGELKIT_THREADS     default worker count (overridden by --threads)
  IGELKIT_CONFIG_DIR  directory holding settings.json
"""


class CliParser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        raise UsageError(message)


def _add_input_options(p):
    p.add_argument("--format", choices=("edgelist", "g6"),
                   help="input format (default: from file extension, .g6 = graph6)")


def _add_method_options(p, methods, config):
    p.add_argument("--method", choices=methods, default=config.get("method", "igel"))
    p.add_argument("--alpha", default=str(config.get("alpha", 2)),
                   help="encoding depth; a comma list (e.g. 1,2) concatenates depths")
    p.add_argument("--wl-max-iters", type=int, default=None,
                   help="cap on refinement rounds for --method wl (default: until stable)")
    p.add_argument("--component-concat", action="store_true",
                   help="compare concatenated depths component-wise instead of per vertex")


def build_parser(config):
    parser = CliParser(
        prog="igelkit",
        description="IGEL ego-network encodings, 1-WL refinement and distinguishability surveys.",
        epilog=EPILOG,
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    parser.add_argument("-v", "--verbose", action="count", default=0,
                        help="more diagnostics on stderr (-vv for debug)")
    parser.add_argument("--threads", type=int, default=config.get("threads", 1),
                        help="worker processes (default: IGELKIT_THREADS or config, else 1)")
    parser.add_argument("--progress", action="store_true", default=config.get("progress", False),
                        help="show progress bars on stderr")
    sub = parser.add_subparsers(dest="command", metavar="COMMAND")
    sub.required = True

    p = sub.add_parser("encode", help="write sparse per-vertex feature vectors")
    p.add_argument("inputs", nargs="+", help="graph files, or @family[:params]")
    _add_input_options(p)
    index = p.add_mutually_exclusive_group()
    index.add_argument("--zero-indexed", action="store_true", help="edge-list ids start at 0 (default)")
    index.add_argument("--one-indexed", action="store_true", help="edge-list ids start at 1")
    p.add_argument("--method", choices=("igel", "gamma"), default="igel")
    p.add_argument("--alpha", default=str(config.get("alpha", 2)),
                   help="encoding depth; a comma list concatenates feature vectors")
    p.add_argument("--dcap", default=config.get("dcap", "auto"),
                   help="degree cap: 'auto' (collection-wide max degree) or an integer")
    p.add_argument("--per-graph-dcap", action="store_true",
                   help="with --dcap auto, cap each graph at its own max degree")
    p.add_argument("--out", help="output file (default: stdout)")
    p.add_argument("--mapping-out", help="write dense -> original vertex ids for edge lists")
    p.set_defaults(handler=commands.cmd_encode)

    p = sub.add_parser("survey", help="bucket a collection by encoding and count collisions")
    p.add_argument("input", help="graph collection (graph6: one graph per line)")
    _add_input_options(p)
    _add_method_options(p, ("wl", "igel", "gamma"), config)
    p.add_argument("--verify", action="store_true",
                   help="check colliding pairs with the exact isomorphism test (n <= 12)")
    p.add_argument("--non-isomorphic", action="store_true",
                   help="collection is known pairwise non-isomorphic; report collisions as errors")
    p.add_argument("--detail", action="store_true", help="include colliding buckets in the report")
    p.add_argument("--json", help="report file (default: stdout)")
    p.set_defaults(handler=commands.cmd_survey)

    p = sub.add_parser("compare", help="compare two graphs under one method")
    p.add_argument("a")
    p.add_argument("b")
    _add_input_options(p)
    _add_method_options(p, ("wl", "igel", "gamma"), config)
    p.add_argument("--index-a", type=int, default=0, help="graph index inside a collection file")
    p.add_argument("--index-b", type=int, default=0)
    p.set_defaults(handler=commands.cmd_compare)

    p = sub.add_parser("gen", help="generate a graph family member")
    p.add_argument("family", choices=sorted(commands.FAMILIES))
    p.add_argument("params", nargs="*", type=int)
    p.add_argument("--seed", type=int, default=None)
    p.add_argument("--out-format", choices=("edgelist", "g6"), default="g6")
    p.add_argument("--out", help="output file (default: stdout)")
    p.set_defaults(handler=commands.cmd_gen)

    p = sub.add_parser("refine", help="dump 1-WL coloring histograms")
    p.add_argument("input")
    _add_input_options(p)
    p.add_argument("--max-iters", type=int, default=None)
    p.add_argument("--out", help="output file (default: stdout)")
    p.set_defaults(handler=commands.cmd_refine)
    return parser


def main(argv=None, config=None):
    config = config or ConfigManager()
    parser = build_parser(config)
    try:
        args = parser.parse_args(argv)
        configure_logging(level_for_verbosity(args.verbose, config.get("log_level", "WARNING")))
        if args.threads < 1:
            raise UsageError(f"--threads must be >= 1, got {args.threads}")
        return args.handler(args, config)
    except SystemExit as exit_:
        return exit_.code if isinstance(exit_.code, int) else EXIT_USAGE
    except UsageError as err:
        print(f"igelkit: usage error: {err}", file=sys.stderr)
        return EXIT_USAGE
    except (IgelError, OSError) as err:
        print(f"igelkit: error: {err}", file=sys.stderr)
        return EXIT_DATA
