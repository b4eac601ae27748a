"""Command-line interface.

Exit codes: 0 success, 1 property failures, 2 usage errors,
3 precondition violations (e.g. asking for the segment of a non-threshold
function, or a malformed grid document).
"""
import argparse
import json
import sys

from .errors import GridParseError, PreconditionError
from .geometry import OrientedSegment
from .gridio import pair_document, parse_grid, render_grid
from .properties import check_property, property_ids
from .threshold import (
    GridDim,
    enumerate_threshold,
    essential_points_threshold,
    function_from_segment,
    segment_from_function,
)
from .two_threshold import (
    classify_function,
    construct_proper_pair,
    count_singleton_proper_pairs,
    enumerate_two_threshold,
    essential_points_2threshold,
    find_all_proper_pairs,
)

EXIT_FAILURES = 1
EXIT_USAGE = 2
EXIT_PRECONDITION = 3


class UsageError(Exception):
    pass


def _point(p):
    return f"({p[0]},{p[1]})"


def _segment_line(seg):
    return f"A={_point(seg.a)} B={_point(seg.b)}"


def _read_function(path):
    try:
        with open(path) as fh:
            text = fh.read()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None
    return parse_grid(text)


def _dim(args):
    return GridDim(*args.grid)


def cmd_eval(args, out):
    dim = _dim(args)
    if len(args.seg) > 2:
        raise UsageError("eval takes one or two --seg options")
    f = None
    for seg in args.seg:
        g = function_from_segment(OrientedSegment(tuple(seg[:2]), tuple(seg[2:])), dim)
        f = g if f is None else f & g
    out.write(render_grid(f))


def cmd_classify(args, out):
    out.write(f"{classify_function(_read_function(args.infile))}\n")


def cmd_segment(args, out):
    out.write(_segment_line(segment_from_function(_read_function(args.infile))) + "\n")


def cmd_pairs(args, out):
    f = _read_function(args.infile)
    pairs = find_all_proper_pairs(f)
    out.write(pair_document(f.dim, pairs if args.all else pairs[:1]))


def cmd_canonical(args, out):
    f = _read_function(args.infile)
    out.write(pair_document(f.dim, [construct_proper_pair(f)]))


def cmd_essential(args, out):
    f = _read_function(args.infile)
    if args.cls == "threshold":
        points = essential_points_threshold(f)
    else:
        points = essential_points_2threshold(f)
    for p in sorted(points):
        out.write(_point(p) + "\n")


def cmd_enumerate(args, out):
    dim = _dim(args)
    if args.cls == "threshold":
        entries = [(_segment_line(s) + "\n", g) for s, g in enumerate_threshold(dim)]
    else:
        entries = [("", g) for g in enumerate_two_threshold(dim)]
    if args.count_only:
        out.write(f"{len(entries)}\n")
        return
    out.write("\n".join(head + render_grid(g) for head, g in entries))


def cmd_count_singleton(args, out):
    out.write(f"{count_singleton_proper_pairs(_dim(args), tuple(args.point))}\n")


def cmd_verify(args, out):
    if args.property not in property_ids():
        raise UsageError(f"unknown property {args.property!r}; known: {', '.join(property_ids())}")
    report = check_property(args.property, _dim(args) if args.grid else None)
    out.write(json.dumps(report.to_dict(), indent=2) + "\n")
    return 0 if report.holds else EXIT_FAILURES


def build_parser():
    parser = argparse.ArgumentParser(
        prog="twothreshold",
        description="Threshold and 2-threshold functions on integer grids.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def grid_arg(p, required=True):
        p.add_argument("--grid", nargs=2, type=int, metavar=("M", "N"), required=required)

    def infile_arg(p):
        p.add_argument("--in", dest="infile", required=True, metavar="FILE",
                       help="grid document")

    p = sub.add_parser("eval", help="truth table of a segment or of a conjunction of two")
    grid_arg(p)
    p.add_argument("--seg", nargs=4, type=int, action="append", required=True,
                   metavar=("AX", "AY", "BX", "BY"))
    p.set_defaults(func=cmd_eval)

    p = sub.add_parser("classify", help="class of a grid function")
    infile_arg(p)
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("segment", help="defining segment of a threshold function")
    infile_arg(p)
    p.set_defaults(func=cmd_segment)

    p = sub.add_parser("pairs", help="proper pairs defining a proper 2-threshold function")
    infile_arg(p)
    p.add_argument("--all", action="store_true", help="list every proper pair, not just the first")
    p.set_defaults(func=cmd_pairs)

    p = sub.add_parser("canonical", help="proper pair built by the existence construction")
    infile_arg(p)
    p.set_defaults(func=cmd_canonical)

    p = sub.add_parser("essential", help="essential points")
    infile_arg(p)
    p.add_argument("--class", dest="cls", choices=("threshold", "2threshold"), required=True)
    p.set_defaults(func=cmd_essential)

    p = sub.add_parser("enumerate", help="list threshold or 2-threshold functions")
    grid_arg(p)
    p.add_argument("--class", dest="cls", choices=("threshold", "2threshold"), required=True)
    p.add_argument("--count-only", action="store_true")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("count-singleton", help="number of proper pairs of an interior singleton")
    grid_arg(p)
    p.add_argument("--point", nargs=2, type=int, metavar=("X", "Y"), required=True)
    p.set_defaults(func=cmd_count_singleton)

    p = sub.add_parser("verify", help="run an exhaustive property suite")
    p.add_argument("--property", required=True, metavar="ID")
    grid_arg(p, required=False)
    p.set_defaults(func=cmd_verify)
    return parser


def run(argv, out=None, err=None) -> int:
    out = sys.stdout if out is None else out
    err = sys.stderr if err is None else err
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    try:
        return args.func(args, out) or 0
    except UsageError as exc:
        err.write(f"twothreshold: error: {exc}\n")
        return EXIT_USAGE
    except (PreconditionError, GridParseError) as exc:
        err.write(f"twothreshold: {exc}\n")
        return EXIT_PRECONDITION


def main():
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
