#!/usr/bin/env python3
"""Classical degree-zero DT invariants of P^3 against the coefficients of M(-q)^-20."""
import argparse
import time

from quaddt.invariants import classical_dt, enumerate_classical_fixed_points
from quaddt.series import classical_series


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--n-max", type=int, default=3)
    ap.add_argument("--lambdas", default="0,1,17,65")
    args = ap.parse_args()
    lam = tuple(int(x) for x in args.lambdas.split(","))
    s = classical_series(args.n_max)
    for n in range(args.n_max + 1):
        t0 = time.perf_counter()
        v = classical_dt(n, lam)
        dt = time.perf_counter() - t0
        npts = len(enumerate_classical_fixed_points(n))
        print(f"I_{n} = {v:>6}   series {int(s[n]):>6}   {npts:>5} fixed points   {dt:.2f}s"
              + ("" if v == s[n] else "   MISMATCH"))


if __name__ == "__main__":
    main()
