#!/usr/bin/env python3
"""Per-fixed-point Euler classes and totals for n = 2, 4, 6 at several parameter choices."""
import argparse

from quaddt.algebra import ALL_REGIONS, ParamChoice, rf_sum_to_constant
from quaddt.invariants import fixed_point_contributions
from quaddt.reference import REFERENCE_POINTS

NAMES = {(rp.piA, rp.piB): rp.name for rp in REFERENCE_POINTS}


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--ab", default="7,1;9,1;11,1;13,1;17,3;19,3", help="semicolon separated a,b pairs")
    args = ap.parse_args()
    params = [ParamChoice(*map(int, s.split(","))) for s in args.ab.split(";")]

    for n in (2, 4, 6):
        print(f"== n = {n}")
        contribs = fixed_point_contributions(n, params[0])
        for c in contribs:
            name = NAMES.get((c.point.piA, c.point.piB), "?")
            print(f"  {name:<10} {c.point.describe():<34} {c.euler}")
        sym = {str(r): rf_sum_to_constant([c.euler for c in fixed_point_contributions(n, r)]) for r in ALL_REGIONS}
        print("  symbolic:", {k: str(v) for k, v in sym.items()})
        num = {str(p): sum(c.euler.evaluate(p.values) for c in fixed_point_contributions(n, p)) for p in params}
        print("  numeric: ", {k: str(v) for k, v in num.items()})


if __name__ == "__main__":
    main()
