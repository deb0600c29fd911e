"""Command-line front end: counts, verification sweeps, correlations, zeta.

Exact integers are always emitted as decimal strings; exit codes are 0 for
success, 1 for a verification failure, 2 for usage or validation errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from itertools import combinations

from . import arith, asymptotics, matrices, oracle, regions
from .zeta import verify_injection


def _parse_holes(text: str) -> list[int]:
    if not text:
        return []
    return [int(tok) for tok in text.split(",") if tok.strip()]


def _spec_from_args(args) -> regions.RegionSpec:
    return regions.validate(args.n, args.m, _parse_holes(args.left), _parse_holes(args.right))


def _add_spec_arguments(parser, holes=True):
    parser.add_argument("--n", type=int, required=True, help="hexagon side n (even)")
    parser.add_argument("--m", type=int, required=True, help="half the horizontal side")
    if holes:
        parser.add_argument("--left", default="", help="comma-separated left-hole positions")
        parser.add_argument("--right", default="", help="comma-separated right-hole positions")


def _emit(payload) -> None:
    print(json.dumps(payload, indent=2, sort_keys=True))


def cmd_count(args) -> int:
    spec = _spec_from_args(args)
    kind = {"upper": "upper_weighted", "free": "free_half"}.get(args.kind, args.kind)
    result = matrices.count_region(spec, kind)
    _emit(result.to_json_dict())
    return 0


def cmd_formulas(args) -> int:
    value = arith.product_formula(args.which, args.n, args.m)
    _emit({"which": args.which, "n": args.n, "m": args.m, "value": str(value)})
    return 0


def cmd_verify(args) -> int:
    failures = 0
    rows = []
    for n in range(2, args.max_n + 1, 2):
        positions = list(range(-n + 2, n - 1, 2))
        for m in range(1, args.max_m + 1):
            specs = [regions.validate(n, m, [], [])]
            for p in range(1, args.max_p + 1):
                if len(positions) < 2 * p:
                    continue
                for chosen in combinations(positions, 2 * p):
                    for lefts in combinations(chosen, p):
                        rights = [x for x in chosen if x not in lefts]
                        specs.append(regions.validate(n, m, lefts, rights))
            for spec in specs:
                formula = matrices.count_region(spec, "full").value
                got = oracle.count_tilings(regions.build_region(spec, "full"))
                match = formula == got
                rows.append((spec.to_text(), formula, got, match))
                if not match:
                    failures += 1
                    if args.strict:
                        print(f"{spec.to_text()} | {formula} | {got} | MISMATCH")
                        return 1
    width = max(len(r[0]) for r in rows)
    for text, formula, got, match in rows:
        print(f"{text:<{width}} | {formula} | {got} | {'ok' if match else 'MISMATCH'}")
    print(f"# {len(rows)} specs, {failures} mismatches")
    return 1 if failures else 0


def cmd_correlate(args) -> int:
    spec = _spec_from_args(args)
    report = asymptotics.finite_correlation(spec, args.model)
    _emit(report.__dict__)
    return 0


def cmd_sweep(args) -> int:
    xi = Fraction(args.xi)
    if not args.separations and not args.n_values:
        print("error: sweep needs --separations or --n-values", file=sys.stderr)
        return 2
    print(asymptotics.CSV_HEADER)
    if args.separations:
        distances = _parse_holes(args.separations)
        reports, slope, intercept = asymptotics.separation_sweep(
            args.size, xi, distances, args.model)
        for report in reports:
            print(report.csv_row())
        if args.fit:
            print(f"# slope={slope!r} intercept={intercept!r}")
    else:
        n_values = _parse_holes(args.n_values)
        reports, trend = asymptotics.size_sweep(
            _parse_holes(args.left), _parse_holes(args.right), xi, n_values,
            scale_holes=args.scale_holes)
        for report in reports:
            print(report.csv_row())
        if args.fit:
            print(f"# trend={trend!r}")
    return 0


def cmd_zeta(args) -> int:
    spec = _spec_from_args(args)
    report = verify_injection(spec, args.kind)
    _emit(report)
    return 0 if report["ok"] else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="holeyhex",
        description="exact tiling counts and hole interactions for holey hexagons")
    sub = parser.add_subparsers(dest="verb", required=True)

    p = sub.add_parser("count", help="exact (weighted) tiling count of a region")
    _add_spec_arguments(p)
    p.add_argument("--kind", default="full",
                   choices=["full", "lower", "upper", "upper_weighted", "free", "free_half"])
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("formulas", help="evaluate a classical product formula")
    p.add_argument("--which", required=True, choices=list(arith.PRODUCT_KINDS))
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.set_defaults(func=cmd_formulas)

    p = sub.add_parser("verify", help="determinant formulas against the tiling oracle")
    p.add_argument("--max-n", type=int, default=6)
    p.add_argument("--max-m", type=int, default=2)
    p.add_argument("--max-p", type=int, default=2)
    p.add_argument("--strict", action="store_true", help="fail fast on first mismatch")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("correlate", help="finite-size correlation report")
    _add_spec_arguments(p)
    p.add_argument("--model", default="bulk", choices=["bulk", "free_boundary"])
    p.set_defaults(func=cmd_correlate)

    p = sub.add_parser("sweep", help="correlation sweeps as CSV")
    p.add_argument("--xi", default="1", help="aspect ratio, rational like 3/2")
    p.add_argument("--model", default="bulk", choices=["bulk", "free_boundary"])
    p.add_argument("--size", type=int, default=200, help="hexagon side for separation sweeps")
    p.add_argument("--separations", default="",
                   help="comma list d1,d2,...: hole pairs at -d,+d")
    p.add_argument("--n-values", default="", help="comma list of hexagon sides")
    p.add_argument("--left", default="")
    p.add_argument("--right", default="")
    p.add_argument("--scale-holes", action="store_true",
                   help="treat hole positions as eighths of n")
    p.add_argument("--fit", action="store_true", help="append the fitted exponent")
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("zeta", help="exhaustive injection check of the transmission map")
    _add_spec_arguments(p)
    p.add_argument("--kind", default="lower", choices=["lower", "upper"])
    p.set_defaults(func=cmd_zeta)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:  # argparse uses its own exit codes
        return 2 if exc.code else 0
    try:
        return args.func(args)
    except regions.SpecValidationError as exc:
        for violation in exc.violations:
            print(f"invalid spec: {violation}", file=sys.stderr)
        return 2
    except (ValueError, ArithmeticError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
