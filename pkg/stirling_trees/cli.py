import argparse
import sys

from . import _console
from ._version import __version__
from .bijections import (
    flatten_trace,
    pathdiagram_to_tree,
    perm_to_tree,
    port_pathdiagram_to_tree,
    port_tree_to_pathdiagram,
    tree_to_pathdiagram,
    tree_to_perm,
)
from .core import count_kary_trees, count_port, count_stirling
from .enumeration import (
    KINDS,
    enum_kary_trees,
    enum_ports,
    enum_stirling,
    random_objects,
)
from .formats import (
    format_histogram,
    format_kary_tree,
    format_pathdiagram,
    format_perm,
    format_port,
    format_profile,
    format_series,
    histogram_to_json,
    parse_kary_tree,
    parse_pathdiagram,
    parse_perm,
    parse_port,
    profile_to_json,
)
from .localtypes import local_types, node_types, type_histogram
from .series import cf_series
from .stats import block_profile, lr_profile, outdegree_profile
from .verify import DEFAULT_MAX_N, SUITES, run_suite

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_FAILED = 2


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _format(obj):
    if hasattr(obj, "word"):
        return format_perm(obj)
    if hasattr(obj, "slots"):
        return format_kary_tree(obj)
    return format_port(obj)


def _count(args):
    if args.kind == "stirling":
        _console.info(str(count_stirling(args.n, args.k)))
    elif args.kind == "kary":
        _console.info(str(count_kary_trees(args.n, args.k)))
    else:
        _console.info(str(count_port(args.n)))
    return EXIT_OK


def _enumerate(args):
    if args.kind == "stirling":
        stream = enum_stirling(args.n, args.k)
    elif args.kind == "kary":
        stream = enum_kary_trees(args.n, args.k)
    else:
        stream = enum_ports(args.n)
    for obj in stream:
        _console.info(_format(obj))
    return EXIT_OK


def _random(args):
    samples = random_objects(args.kind, args.n, args.k, args.seed, args.count)
    for obj in samples:
        _console.info(_format(obj))
    return EXIT_OK


def _read_object(text, k):
    if text.lstrip().startswith(("(", "_")):
        return parse_kary_tree(text, k)
    return parse_perm(text, k)


def _classify(args):
    obj = _read_object(sys.stdin.read(), args.k)
    types = local_types(obj) if hasattr(obj, "word") else node_types(obj)
    histogram = type_histogram(obj)
    if args.json:
        _console.info(histogram_to_json(histogram, types))
        return EXIT_OK
    for label, bits in enumerate(types, 1):
        _console.info(f"{label}: {bits}")
    _console.info(f"histogram: {format_histogram(histogram)}")
    return EXIT_OK


def _convert(args):
    text = sys.stdin.read()
    if args.trace and (args.source, args.target) != ("pathdiagram", "perm"):
        raise UsageError("--trace needs --from pathdiagram --to perm")
    if args.kind == "port":
        return _convert_port(args, text)

    if args.source == "perm":
        tree = perm_to_tree(parse_perm(text, args.k))
    elif args.source == "tree":
        tree = parse_kary_tree(text, args.k)
    else:
        diagram = parse_pathdiagram(text, args.k)
        if args.trace:
            for code in flatten_trace(diagram):
                _console.info(
                    " ".join("_" if c is None else str(c) for c in code)
                )
            return EXIT_OK
        tree = pathdiagram_to_tree(diagram)

    if args.target == "perm":
        _console.info(format_perm(tree_to_perm(tree)))
    elif args.target == "tree":
        _console.info(format_kary_tree(tree))
    else:
        _console.info(format_pathdiagram(tree_to_pathdiagram(tree)))
    return EXIT_OK


def _convert_port(args, text):
    if "perm" in (args.source, args.target):
        raise UsageError(
            "plane-oriented trees convert between tree and pathdiagram only"
        )
    if args.source == "tree":
        tree = parse_port(text)
    else:
        tree = port_pathdiagram_to_tree(parse_pathdiagram(text))
    if args.target == "tree":
        _console.info(format_port(tree))
    else:
        _console.info(format_pathdiagram(port_tree_to_pathdiagram(tree)))
    return EXIT_OK


def _series(args):
    series = cf_series(args.k, args.max_deg, args.h)
    if args.mark_last_leaf:
        series = series.shift_last_leaf()
    if args.all_ones:
        for degree, total in enumerate(series.all_ones()):
            _console.info(f"{total} t^{degree}")
    else:
        _console.info(format_series(series))
    return EXIT_OK


def _verify(args):
    failed = False
    suite = None
    for result in run_suite(args.suite, args.max_n):
        if result.suite != suite:
            suite = result.suite
            _console.info(f"[{suite}]")
        failed = failed or not result.passed
        line = (
            f"{_console.status(result.passed, result.informational)} "
            f"{result.suite}: {result.name} ({result.checked} checked)"
        )
        if result.detail:
            line += f" {result.detail}"
        _console.info(line)
    if failed:
        _console.error("verification failed")
        return EXIT_FAILED
    _console.success("all properties hold")
    return EXIT_OK


def _stats(args):
    text = sys.stdin.read()
    if args.kind == "stirling":
        profile = block_profile(parse_perm(text, args.k))
    elif args.kind == "kary":
        profile = lr_profile(parse_kary_tree(text, args.k))
    else:
        profile = outdegree_profile(parse_port(text))
    if args.json:
        _console.info(profile_to_json(profile))
        return EXIT_OK
    _console.info(format_profile(profile))
    if profile.auxiliary is not None:
        _console.info(f"auxiliary: {profile.auxiliary}")
    return EXIT_OK


def _positive(text):
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError("expected a positive integer")
    return value


def _natural(text):
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError("expected a non-negative integer")
    return value


def build_parser():
    parser = _Parser(
        prog="stirling-trees",
        description=(
            "k-Stirling permutations, (k+1)-ary increasing trees, "
            "plane-oriented recursive trees and their path diagrams."
        ),
    )
    parser.add_argument(
        "--version", action="version", version=f"%(prog)s {__version__}"
    )
    commands = parser.add_subparsers(dest="command", metavar="command")
    commands.required = True

    def add(name, handler, summary):
        command = commands.add_parser(name, help=summary)
        command.set_defaults(handler=handler)
        return command

    def kind(command):
        command.add_argument(
            "--class", dest="kind", choices=KINDS, required=True
        )

    def k(command, default=1):
        command.add_argument(
            "--k", type=_positive, default=default, required=default is None
        )

    command = add("count", _count, "count objects of size n")
    kind(command)
    k(command)
    command.add_argument("--n", type=_natural, required=True)

    command = add("enumerate", _enumerate, "list every object of size n")
    kind(command)
    k(command)
    command.add_argument("--n", type=_natural, required=True)

    command = add("random", _random, "sample uniform objects of size n")
    kind(command)
    k(command)
    command.add_argument("--n", type=_natural, required=True)
    command.add_argument(
        "--seed",
        type=_natural,
        default=0,
        help="non-negative entropy for numpy's SeedSequence",
    )
    command.add_argument("--count", type=_positive, default=1)

    command = add(
        "classify", _classify, "local or node types of the object on stdin"
    )
    k(command, default=None)
    command.add_argument("--json", action="store_true")

    command = add("convert", _convert, "convert the object on stdin")
    forms = ("perm", "tree", "pathdiagram")
    command.add_argument("--from", dest="source", choices=forms, required=True)
    command.add_argument("--to", dest="target", choices=forms, required=True)
    k(command)
    command.add_argument(
        "--class", dest="kind", choices=("kary", "port"), default="kary"
    )
    command.add_argument("--trace", action="store_true")

    command = add("series", _series, "continued-fraction series of types")
    k(command, default=None)
    command.add_argument("--max-deg", type=_natural, required=True)
    command.add_argument("--h", type=_natural, default=None)
    command.add_argument("--all-ones", action="store_true")
    command.add_argument("--mark-last-leaf", action="store_true")

    command = add("verify", _verify, "check identities exhaustively")
    command.add_argument(
        "--suite", choices=["all", *SUITES], default="all"
    )
    command.add_argument("--max-n", type=_positive, default=DEFAULT_MAX_N)

    command = add("stats", _stats, "statistic profile of the object on stdin")
    kind(command)
    k(command, default=2)
    command.add_argument("--json", action="store_true")
    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.handler(args)
    except UsageError as exc:
        parser.print_usage(sys.stderr)
        _console.error(f"{parser.prog}: error: {exc}")
        return EXIT_USAGE
    except ValueError as exc:
        _console.error(str(exc))
        return EXIT_USAGE
