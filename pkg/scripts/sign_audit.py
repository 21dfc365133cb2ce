#!/usr/bin/env python3
"""Which sign rules actually move the answer for n <= 6.

For every nonzero couple, count the Ext weights with |m| = 2 mod 4 and the
even negative weights.  A rule only matters through the parity of its count,
so this shows which rule a negative control has to corrupt.
"""
from collections import Counter

from quaddt.algebra import ParamChoice
from quaddt.euler import corrupted_signs, quadratic_euler_data, split_trace
from quaddt.invariants import quadratic_dt
from quaddt.partitions import enumerate_partitions
from quaddt.vertex import COUPLES, couple_trace


def main():
    p = ParamChoice(7, 1)
    parity = Counter()
    for m in range(1, 4):
        for pi in enumerate_partitions(m):
            for couple in COUPLES:
                u0 = couple_trace(pi, couple).u0_part
                if quadratic_euler_data(u0, p).euler.is_zero():
                    continue
                ext1, ext2 = split_trace(u0)
                ws = ext1 + ext2
                assert all(p.value(w) % 2 == 0 for w in ws)
                res2 = sum(abs(p.value(w)) % 4 == 2 for w in ws)
                neg = sum(p.value(w) < 0 for w in ws)
                parity[(res2 % 2, neg % 2)] += 1
    print("couples by (parity of |m|=2 mod 4 count, parity of even-negative count):", dict(parity))
    print("honest       :", [quadratic_dt(n, "numeric", p) for n in (2, 4, 6)])
    for table in ({2: -1}, {0: 1}, {2: -1, 0: 1}):
        with corrupted_signs("table", table):
            print(f"table {table!s:<16}:", [quadratic_dt(n, "numeric", p) for n in (2, 4, 6)])
    with corrupted_signs("orientation"):
        try:
            print("no orientation:", [quadratic_dt(n, "numeric", p) for n in (2, 4, 6)])
        except ArithmeticError as exc:
            print("no orientation:", type(exc).__name__, exc)


if __name__ == "__main__":
    main()
