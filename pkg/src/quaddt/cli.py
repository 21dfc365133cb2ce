"""Command-line front end.

    quaddt quadratic --n 6 --ab 7,1 --mode both
    quaddt classical --n 2 --lambdas 0,1,17,65
    quaddt series --kind conjecture --order 16
    quaddt conjecture --n-max 6
    quaddt verify [--only series]

Exit codes: 0 success, 1 usage error, 2 method not applicable (non-isolated
fixed points), 3 verification failure.
"""
from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from .algebra import DegenerateParameters, InvalidParams, ParamChoice
from .euler import NonIsolatedFixedPoint
from .invariants import (
    DEFAULT_LAMBDAS,
    Disagreement,
    MAX_ISOLATED_N,
    NonInteger,
    classical_dt,
    classical_series_coefficient,
    conjecture_check,
    quadratic_report,
)
from .series import DEFAULT_ORDER, classical_series, conjectural_series, macmahon

EXIT_OK, EXIT_USAGE, EXIT_NON_ISOLATED, EXIT_FAILED = 0, 1, 2, 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: error: {message}")


def _pair(text: str) -> ParamChoice:
    try:
        a, b = (int(x) for x in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a,b got {text!r}") from None
    try:
        return ParamChoice(a, b)
    except InvalidParams as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _lambdas(text: str) -> tuple[Fraction, ...]:
    try:
        vals = tuple(Fraction(x) for x in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected four rationals, got {text!r}") from None
    if len(vals) != 4:
        raise argparse.ArgumentTypeError("expected exactly four values l0,l1,l2,l3")
    return vals


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="quaddt", description="Quadratic and classical DT invariants of P^3 by localization.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    q = sub.add_parser("quadratic", help="quadratic invariant I~_n")
    q.add_argument("--n", type=int, required=True)
    q.add_argument("--ab", type=_pair, action="append", default=[], metavar="a,b",
                   help="parameter choice (odd, a > 5b > 0); repeatable; default 7,1")
    q.add_argument("--mode", choices=["symbolic", "numeric", "both"], default="numeric")
    q.add_argument("--format", choices=["table", "json"], default="table")
    q.add_argument("--jobs", type=int, default=1, help="worker processes for per-point work")

    c = sub.add_parser("classical", help="classical DT invariant I_n of P^3")
    c.add_argument("--n", type=int, required=True)
    c.add_argument("--lambdas", type=_lambdas, default=DEFAULT_LAMBDAS, metavar="l0,l1,l2,l3")
    c.add_argument("--format", choices=["table", "json"], default="table")

    s = sub.add_parser("series", help="print truncated series coefficients")
    s.add_argument("--kind", choices=["macmahon", "classical", "conjecture"], default="conjecture")
    s.add_argument("--order", type=int, default=DEFAULT_ORDER)
    s.add_argument("--format", choices=["table", "json"], default="table")

    cj = sub.add_parser("conjecture", help="compare I~_n with M(-q^2)^-10")
    cj.add_argument("--n-max", type=int, default=MAX_ISOLATED_N)
    cj.add_argument("--format", choices=["table", "json"], default="table")

    v = sub.add_parser("verify", help="run the acceptance checks")
    v.add_argument("--only", action="append", default=None, help="run only this group (repeatable)")
    v.add_argument("--corrupt-signs", action="store_true", help=argparse.SUPPRESS)
    return p


def _dump(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=False)


def _frac(x) -> int | str:
    x = Fraction(x)
    return int(x) if x.denominator == 1 else str(x)


def cmd_quadratic(args) -> int:
    if args.n < 0:
        raise UsageError("--n must be nonnegative")
    report = quadratic_report(args.n, args.mode, args.ab, args.jobs)
    if args.format == "json":
        print(_dump(report))
        return EXIT_OK
    print(f"I~_{args.n}  mode={args.mode}  params={report['params']}")
    if report.get("note"):
        print(report["note"])
    rows = report["fixed_points"]
    if rows:
        w = max(len(r["ideal"]) for r in rows)
        for i, r in enumerate(rows, 1):
            val = r["euler_numeric"] if r["euler_numeric"] is not None else ""
            extra = f"   [{r['zero_reason']}]" if "zero_reason" in r else ""
            print(f"{i:3d}  {r['ideal']:<{w}}  {r['euler_factored']}" + (f"  = {val}" if val else "") + extra)
    for run in report["runs"]:
        where = run.get("params") or run.get("region")
        print(f"  {run['mode']:<9} {where}: {run['total']}")
    print(f"total: {report['total']}")
    return EXIT_OK


def cmd_classical(args) -> int:
    if args.n < 0:
        raise UsageError("--n must be nonnegative")
    value = classical_dt(args.n, args.lambdas)
    coeff = classical_series_coefficient(args.n)
    rec = {"n": args.n, "lambdas": [_frac(x) for x in args.lambdas], "I_n": value,
           "series_coefficient": _frac(coeff), "match": value == coeff}
    if args.format == "json":
        print(_dump(rec))
    else:
        print(f"I_{args.n} = {value}   (coefficient of q^{args.n} in M(-q)^-20: {_frac(coeff)})")
    return EXIT_OK


def cmd_series(args) -> int:
    if args.order < 0:
        raise UsageError("--order must be nonnegative")
    s = {"macmahon": macmahon, "classical": classical_series, "conjecture": conjectural_series}[args.kind](args.order)
    coeffs = s.ints()
    if args.format == "json":
        print(_dump({"kind": args.kind, "order": s.order, "coeffs": coeffs}))
    else:
        print(" ".join(str(c) for c in coeffs))
    return EXIT_OK


def cmd_conjecture(args) -> int:
    if args.n_max < 0 or args.n_max > MAX_ISOLATED_N:
        raise UsageError(f"--n-max must be in 0..{MAX_ISOLATED_N}")
    rows = conjecture_check(args.n_max)
    recs = [{"n": r.n, "computed": r.computed, "predicted": _frac(r.predicted), "match": r.match} for r in rows]
    if args.format == "json":
        print(_dump({"exponent": -10, "rows": recs, "all_match": all(r.match for r in rows)}))
    else:
        for r in recs:
            print(f"n={r['n']}: I~={r['computed']:>4}  series={r['predicted']:>4}  {'ok' if r['match'] else 'MISMATCH'}")
    return EXIT_OK


def cmd_verify(args) -> int:
    from .verify import GROUPS, run_checks

    if args.only:
        unknown = [g for g in args.only if g not in GROUPS]
        if unknown:
            raise UsageError(f"unknown group(s) {unknown}; choose from {GROUPS}")
    results = run_checks(args.only, corrupt_signs=args.corrupt_signs)
    for r in results:
        print(r.line())
    failed = [r for r in results if not r.passed]
    print(f"{len(results) - len(failed)}/{len(results)} passed")
    return EXIT_FAILED if failed else EXIT_OK


COMMANDS = {
    "quadratic": cmd_quadratic,
    "classical": cmd_classical,
    "series": cmd_series,
    "conjecture": cmd_conjecture,
    "verify": cmd_verify,
}


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return COMMANDS[args.command](args)
    except UsageError as exc:
        print(exc, file=sys.stderr)
        return EXIT_USAGE
    except NonIsolatedFixedPoint as exc:
        print(f"method not applicable: {exc}", file=sys.stderr)
        for name in exc.points:
            print(f"  non-isolated: {name}", file=sys.stderr)
        return EXIT_NON_ISOLATED
    except DegenerateParameters as exc:
        print(f"degenerate parameters: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (Disagreement, NonInteger) as exc:
        print(f"internal check failed: {exc}", file=sys.stderr)
        return EXIT_FAILED


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()
