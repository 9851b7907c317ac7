"""Command-line entry point: ``decompose`` and ``verify`` subcommands."""
import argparse
import os
import sys

from . import __version__
from .tableio import (SmoothingPolicy, build_report, dumps_report, emit_tables,
                      parse_counts_csv)
from .verify import run_checks

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_USAGE = 2


def _diagnostic(message):
    text = f"error: {message}"
    if sys.stderr.isatty() and "NO_COLOR" not in os.environ:
        text = f"\033[31m{text}\033[0m"
    print(text, file=sys.stderr)


def _sizes(text):
    lo, sep, hi = text.partition("..")
    try:
        if sep:
            sizes = list(range(int(lo), int(hi) + 1))
        else:
            sizes = [int(s) for s in text.split(",")]
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"invalid size range {text!r}") from exc
    if not sizes or min(sizes) < 2:
        raise argparse.ArgumentTypeError("sizes must be integers >= 2")
    return sizes


def _smoothing(text):
    try:
        return SmoothingPolicy.parse(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from exc


def build_parser():
    parser = argparse.ArgumentParser(
        prog="simplicial-tables",
        description="Aitchison-geometry decomposition of square contingency tables.")
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    dec = sub.add_parser("decompose", help="decompose a count table and write a report")
    dec.add_argument("--input", required=True, help="CSV file of nonnegative integer counts")
    dec.add_argument("--smoothing", type=_smoothing, default=SmoothingPolicy(),
                     metavar="reject|pseudocount[=ALPHA]",
                     help="zero-cell policy (default: reject; pseudocount default 0.5)")
    dec.add_argument("--output", help="JSON report path (default: stdout)")
    dec.add_argument("--emit-tables", metavar="DIR",
                     help="also write each derived table and array as CSV into DIR")
    dec.add_argument("--percent-decimals", type=int, default=2, metavar="N",
                     help="decimals for percent arrays in emitted CSV (default: 2)")

    ver = sub.add_parser("verify", help="run the numerical verification suite")
    ver.add_argument("--sizes", type=_sizes, default=list(range(2, 7)),
                     help="table sizes, e.g. 2..6 or 3,4 (default: 2..6)")
    ver.add_argument("--trials", type=int, default=1000,
                     help="random tables / subspace members per check (default: 1000)")
    ver.add_argument("--seed", type=int, default=0, help="root seed (default: 0)")
    return parser


def run_decompose(args):
    if not os.path.isfile(args.input):
        _diagnostic(f"input file not found: {args.input}")
        return EXIT_USAGE
    try:
        counts = parse_counts_csv(args.input)
        doc = build_report(counts, args.smoothing, input_path=args.input)
        text = dumps_report(doc)
        if args.output:
            with open(args.output, "w", encoding="utf-8") as fh:
                fh.write(text)
        else:
            sys.stdout.write(text)
        if args.emit_tables:
            emit_tables(doc, args.emit_tables, args.percent_decimals)
    except (ValueError, OSError) as exc:
        _diagnostic(str(exc))
        return EXIT_FAIL
    return EXIT_OK


def run_verify(args, projections=None):
    if args.trials < 1:
        _diagnostic("--trials must be at least 1")
        return EXIT_USAGE
    results = run_checks(args.sizes, args.trials, args.seed, projections)
    for r in results:
        print(r.line())
    failed = sum(not r.passed for r in results)
    print(f"{len(results) - failed}/{len(results)} checks passed")
    return EXIT_OK if failed == 0 else EXIT_FAIL


def main(argv=None):
    args = build_parser().parse_args(argv)
    if args.command == "decompose":
        return run_decompose(args)
    return run_verify(args)


if __name__ == "__main__":
    sys.exit(main())
