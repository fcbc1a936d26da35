"""Command line entry point: ``circpat {count,dist,seq,series,verify}``.

Exit codes: 0 success, 1 verification failure, 2 usage error, 3 size cap exceeded.
"""
from __future__ import annotations

import argparse
import csv
import json
import sys
from fractions import Fraction

from . import verify as V
from .enumeration import DEFAULT_MAX_N, DistributionTable, avoidance_sequence
from .errors import CircpatError, InvalidPatternError, ResourceLimitError
from .gfengine import pattern_gf
from .permcore import (CircularClass, check_pattern, format_word, occurrences_circular,
                       occurrences_linear, parse_word)

HARD_MAX_N = 11
MAX_ORDER = 64

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_RESOURCE = 0, 1, 2, 3


class UsageError(Exception):
    pass


def _pattern(text):
    try:
        return check_pattern(parse_word(text))
    except InvalidPatternError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _word(text):
    try:
        return parse_word(text)
    except InvalidPatternError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _rational(text):
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not a rational number: {text!r}") from None


def _check_caps(args):
    max_n = getattr(args, "max_n", DEFAULT_MAX_N)
    if max_n > HARD_MAX_N:
        raise UsageError(f"--max-n may not exceed {HARD_MAX_N}")
    if getattr(args, "order", 0) > MAX_ORDER:
        raise UsageError(f"--order may not exceed {MAX_ORDER}")
    if getattr(args, "jobs", 1) < 1:
        raise UsageError("--jobs must be positive")


# -- subcommands --------------------------------------------------------------

def cmd_count(args, out):
    if args.circular:
        c = CircularClass.of(args.word)
        res = occurrences_circular(args.pattern, c)
        obj = {"pattern": format_word(args.pattern), "word": str(c), "kind": "circular"}
    else:
        res = occurrences_linear(args.pattern, args.word)
        obj = {"pattern": format_word(args.pattern), "word": format_word(args.word),
               "kind": "linear"}
    if args.format == "json":
        obj.update(count=res.count, positions=list(res.positions),
                   windows=[format_word(w) for w in res.windows])
        out.write(json.dumps(obj) + "\n")
    else:
        out.write(f"{res.count}\n")
        if res.count:
            out.write("positions: " + " ".join(str(p) for p in res.positions) + "\n")
            out.write("windows: " + " ".join(format_word(w) for w in res.windows) + "\n")
    return EXIT_OK


def cmd_dist(args, out):
    kind = "linear" if args.linear else "circular"
    if args.n > args.max_n:
        raise ResourceLimitError(f"size {args.n} exceeds enumeration cap {args.max_n}")
    lo = 0 if args.all_rows else args.n
    table = DistributionTable.build(args.pattern, kind, args.n, workers=args.jobs,
                                    max_n=args.max_n)
    rows = {n: p for n, p in table.rows.items() if n >= lo}
    table = DistributionTable(table.pattern, kind, rows)
    if args.format == "json":
        out.write(table.to_json() + "\n")
    elif args.format == "csv":
        w = csv.writer(out, lineterminator="\n")
        w.writerow(["n", "k", "count"])
        for n, p in sorted(rows.items()):
            for k, c in p.to_pairs(fraction_form=False):
                w.writerow([n, k, c])
    else:
        if args.all_rows:
            for n, p in sorted(rows.items()):
                out.write(f"{n}: {p}\n")
        else:
            out.write(f"{rows[args.n]}\n")
    return EXIT_OK


def cmd_seq(args, out):
    seq = avoidance_sequence(args.pattern, args.n_max, workers=args.jobs, max_n=args.max_n)
    out.write(",".join(str(x) for x in seq) + "\n")
    return EXIT_OK


def cmd_series(args, out):
    gf = pattern_gf(args.pattern, args.order, args.source, u=args.u,
                    workers=args.jobs, max_n=args.max_n)
    series = gf.get(args.gf)
    if args.format == "json":
        out.write(json.dumps(gf.to_json_obj(args.gf)) + "\n")
    elif args.format == "egf":
        for n in range(series.order + 1):
            out.write(f"{n}: {series.egf_row(n)}\n")
    else:
        for n, c in enumerate(series.coeffs):
            out.write(f"z^{n}: {c}\n")
    return EXIT_OK


def cmd_verify(args, out):
    if args.all or not args.identity:
        identities = V.IDENTITIES
    else:
        identities = args.identity
    reports = V.run_suite(args.n_max, args.order, args.tol, workers=args.jobs,
                          identities=identities, patterns=args.pattern or None,
                          max_n=args.max_n)
    if args.format == "csv":
        out.write(V.reports_to_csv(reports))
    elif args.format == "table":
        out.write(V.reports_to_table(reports))
    else:
        out.write(V.reports_to_jsonl(reports, include_timing=args.timing))
    return EXIT_OK if all(r.ok for r in reports) else EXIT_FAIL


# -- parser -------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="circpat",
        description="Consecutive patterns in linear and circular permutations.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_enum_flags(p):
        p.add_argument("--jobs", type=int, default=1, help="worker processes for enumeration")
        p.add_argument("--max-n", type=int, default=DEFAULT_MAX_N,
                       help=f"enumeration size cap (at most {HARD_MAX_N})")

    p = sub.add_parser("count", help="count occurrences of a pattern in one word")
    p.add_argument("pattern", type=_pattern)
    p.add_argument("word", type=_word)
    p.add_argument("--circular", action="store_true", help="allow windows to wrap around")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("dist", help="occurrence distribution over all objects of size n")
    p.add_argument("pattern", type=_pattern)
    p.add_argument("n", type=int)
    kind = p.add_mutually_exclusive_group()
    kind.add_argument("--circular", action="store_true", default=True)
    kind.add_argument("--linear", action="store_true")
    p.add_argument("--all-rows", action="store_true", help="print every size 0..n")
    p.add_argument("--format", choices=("text", "json", "csv"), default="text")
    add_enum_flags(p)
    p.set_defaults(func=cmd_dist)

    p = sub.add_parser("seq", help="circular avoidance counts for sizes 0..n-max")
    p.add_argument("pattern", type=_pattern)
    p.add_argument("--n-max", type=int, default=8)
    add_enum_flags(p)
    p.set_defaults(func=cmd_seq)

    p = sub.add_parser("series", help="truncated generating function of a pattern")
    p.add_argument("pattern", type=_pattern)
    p.add_argument("--gf", choices=("P", "omega", "C", "D"), default="C")
    p.add_argument("--order", type=int, default=8)
    p.add_argument("--source", choices=("bruteforce", "ode", "closed-form"), default="ode")
    p.add_argument("--u", type=_rational, default=None, help="substitute a rational for u")
    p.add_argument("--format", choices=("text", "egf", "json"), default="text")
    add_enum_flags(p)
    p.set_defaults(func=cmd_series)

    p = sub.add_parser("verify", help="run identity checks, JSON lines on stdout")
    p.add_argument("--all", action="store_true", help="run every check (the default)")
    p.add_argument("--identity", action="append", choices=V.IDENTITIES)
    p.add_argument("--pattern", action="append", type=_pattern)
    p.add_argument("--n-max", type=int, default=8)
    p.add_argument("--order", type=int, default=20)
    p.add_argument("--tol", type=float, default=1e-8)
    p.add_argument("--format", choices=("jsonl", "csv", "table"), default="jsonl")
    p.add_argument("--timing", action="store_true", help="include wall times in JSON")
    add_enum_flags(p)
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None, out=None) -> int:
    out = out if out is not None else sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        _check_caps(args)
        return args.func(args, out)
    except UsageError as exc:
        sys.stderr.write(f"circpat: error: {exc}\n")
        return EXIT_USAGE
    except ResourceLimitError as exc:
        sys.stderr.write(f"circpat: resource cap: {exc}\n")
        return EXIT_RESOURCE
    except (CircpatError, ValueError) as exc:
        sys.stderr.write(f"circpat: error: {exc}\n")
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
