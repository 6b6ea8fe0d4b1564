"""Command-line front end.

Exit codes: 0 success, 1 domain error (bad partition, bad p, cap
exceeded), 2 usage error, 3 verify found a failing property.  Domain
errors print `error: <msg>` to stderr in text mode and an
`{"error": <msg>}` object to stdout in json mode.
"""

import argparse
import json
import os
import sys

from .bg import bg_symbol, bg_to_mull, mull_to_bg
from .census import bg_counts_from_gf, census
from .partitions import check_odd_p, format_partition, parse_partition
from .render import peel_iterations, render_peeled
from .symbols import mullineux_map, mullineux_symbol
from .verify import run_checks

DEFAULT_MAX_N = 30


def _is_prime(p):
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


def _enumeration_cap():
    raw = os.environ.get("MULLI_MAX_N")
    if raw is None:
        return DEFAULT_MAX_N
    try:
        return int(raw)
    except ValueError:
        raise ValueError(f"MULLI_MAX_N must be an integer, got {raw!r}") from None


def _check_n(n):
    cap = _enumeration_cap()
    if n < 0:
        raise ValueError(f"n must be >= 0, got {n}")
    if n > cap:
        raise ValueError(f"n={n} exceeds the enumeration cap {cap} (set MULLI_MAX_N to raise it)")
    return n


def _build_parser():
    parser = argparse.ArgumentParser(
        prog="mulli",
        description="Mullineux symbols, BG-partitions, and the bijection between their fixed-point families.",
    )
    sub = parser.add_subparsers(dest="subcommand", required=True)

    def add(name, help_text, partition=False, n=False, direction=False, star=False, csv=False):
        cmd = sub.add_parser(name, help=help_text)
        cmd.add_argument("-p", type=int, required=True, metavar="P", help="odd modulus >= 3")
        formats = ("text", "json", "csv") if csv else ("text", "json")
        cmd.add_argument("--format", choices=formats, default="text")
        cmd.add_argument("--out", metavar="PATH", help="write output to a file instead of stdout")
        cmd.add_argument("--strict-prime", action="store_true", help="reject composite p instead of warning")
        if partition:
            cmd.add_argument("partition", help="comma form, exponents allowed: 7,5,2^3,1^2 ('-' for the empty partition)")
        if n:
            cmd.add_argument("-n", type=int, required=True, metavar="N", help="size bound")
        if direction:
            cmd.add_argument("--direction", choices=("bg2m", "m2bg"), required=True)
        if star:
            cmd.add_argument("--star", action="store_true", help="peel symmetrized rims (self-conjugate input)")
        return cmd

    add("symbol", "Mullineux symbol of a p-regular partition", partition=True)
    add("bg-symbol", "bg symbol of a self-conjugate partition", partition=True)
    add("map", "image under the Mullineux map", partition=True)
    add("bijection", "BG <-> self-Mullineux partner", partition=True, direction=True)
    add("census", "families and pairing at one size", n=True, csv=True)
    add("gf", "generating function coefficients up to n", n=True)
    add("verify", "run every invariant check up to size n", n=True)
    add("render", "diagram with cells labelled by peeling step", partition=True, star=True)
    return parser


def _run(args):
    """Dispatch one parsed command; returns (payload, exit code)."""
    check_odd_p(args.p)
    if not _is_prime(args.p):
        if args.strict_prime:
            raise ValueError(f"p={args.p} is not prime")
        print(f"warning: p={args.p} is not prime; theorems are proved for prime p", file=sys.stderr)
    as_json = args.format == "json"

    if args.subcommand == "symbol":
        sym = mullineux_symbol(parse_partition(args.partition), args.p)
        return (json.dumps(sym.to_json_dict()) if as_json else sym.to_text()), 0

    if args.subcommand == "bg-symbol":
        sym = bg_symbol(parse_partition(args.partition), args.p)
        return (json.dumps(sym.to_json_dict()) if as_json else sym.to_text()), 0

    if args.subcommand == "map":
        image = mullineux_map(parse_partition(args.partition), args.p)
        return (json.dumps(list(image)) if as_json else format_partition(image)), 0

    if args.subcommand == "bijection":
        go = bg_to_mull if args.direction == "bg2m" else mull_to_bg
        image = go(parse_partition(args.partition), args.p)
        return (json.dumps(list(image)) if as_json else format_partition(image)), 0

    if args.subcommand == "census":
        report = census(args.p, _check_n(args.n))
        if args.format == "csv":
            return report.to_csv().rstrip("\n"), 0
        return (json.dumps(report.to_json_dict()) if as_json else report.to_text()), 0

    if args.subcommand == "gf":
        coeffs = bg_counts_from_gf(args.p, _check_n(args.n))
        if as_json:
            return json.dumps(coeffs), 0
        return "\n".join(f"{n} {c}" for n, c in enumerate(coeffs)), 0

    if args.subcommand == "verify":
        results = run_checks(args.p, _check_n(args.n))
        code = 0 if all(r.ok for r in results) else 3
        if as_json:
            return json.dumps([{"name": r.name, "ok": r.ok, "detail": r.detail, "cases": r.cases} for r in results]), code
        lines = [f"{'PASS' if r.ok else 'FAIL'} {r.name}: {r.detail}" for r in results]
        return "\n".join(lines), code

    if args.subcommand == "render":
        lam = parse_partition(args.partition)
        if as_json:
            layers = peel_iterations(lam, args.p, star=args.star)
            return json.dumps([[list(cell) for cell in sorted(layer)] for layer in layers]), 0
        return render_peeled(lam, args.p, star=args.star), 0

    raise AssertionError(f"unhandled subcommand {args.subcommand}")


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        payload, code = _run(args)
    except ValueError as exc:
        if args.format == "json":
            print(json.dumps({"error": str(exc)}))
        else:
            print(f"error: {exc}", file=sys.stderr)
        return 1
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(payload + "\n")
    else:
        print(payload)
    return code
