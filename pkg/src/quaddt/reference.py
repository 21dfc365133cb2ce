"""Reference Euler classes of the N_S-fixed points of length <= 6, as printed formulas.

Each entry names the fixed point by its couple-A partition (on U0, variables
x, y, z) and couple-B partition (on U2, variables x', y', z').
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .algebra import FactoredRational
from .partitions import Partition3D

P = Partition3D.of
EMPTY = P([])
PT = P([(0, 0, 0)])


def col(axis, n):
    return Partition3D.column(axis, n)


def _f(scalar, num, den):
    return FactoredRational.build(scalar, num, den)


E = {
    "e11": _f(1, ["3a-b", "3a+b"], ["a-b", "a+b"]),
    "e12": _f(1, ["3b-a", "3b+a"], ["b-a", "a+b"]),
    "e22": _f(1, ["3a-b", "3a-b", "3a+b", "2a-b"], ["b", "a-b", "a-b", "a+b"]),
    "e23": _f(1, ["3b-a", "3b-a", "3b+a", "2b-a"], ["a", "b-a", "b-a", "a+b"]),
    "e24": _f(-1, ["3a-b", "3a+b", "3a+b", "2a+b"], ["b", "a-b", "a+b", "a+b"]),
    "e25": _f(-1, ["3b-a", "3b+a", "3b+a", "2b+a"], ["a", "b-a", "a+b", "a+b"]),
    "e35": _f(Fraction(1, 3), ["3a-b"] * 2 + ["3a+b", "a+3b", "5a-3b"] + ["2a-b"] * 2,
              ["b", "b"] + ["a-b"] * 3 + ["a+b", "3b-a"]),
    "e36": _f(Fraction(1, 3), ["3b-a"] * 2 + ["3b+a", "b+3a", "5b-3a"] + ["2b-a"] * 2,
              ["a", "a"] + ["b-a"] * 3 + ["a+b", "3a-b"]),
    "e37": _f(Fraction(-1, 3), ["3a-b", "3a+b", "3a+b", "a-3b", "5a+3b", "2a+b", "2a+b"],
              ["b", "b", "a-b", "a+b", "a+b", "a+b", "a+3b"]),
    "e38": _f(Fraction(-1, 3), ["3b-a", "3b+a", "3b+a", "b-3a", "5b+3a", "2b+a", "2b+a"],
              ["a", "a", "b-a", "a+b", "a+b", "a+b", "b+3a"]),
    "e39": _f(1, ["3a+b", "3a-b", "5a-b", "2a-b", "2a+b"], ["b", "b", "a-b", "a-b", "a+b"]),
    "e310": _f(1, ["3b+a", "3b-a", "5b-a", "2b-a", "2b+a"], ["a", "a", "a-b", "a-b", "a+b"]),
    "e311": _f(9, ["3a+b"] * 3 + ["3a-b"] * 3, ["a+b", "a+b", "a-b", "a-b", "a+3b", "a-3b"]),
    "e312": _f(9, ["3b+a"] * 3 + ["3b-a"] * 3, ["a+b", "a+b", "a-b", "a-b", "b+3a", "b-3a"]),
    "e313": _f(1, ["3a-b", "3a+b", "5a+b", "2a+b", "2a-b"], ["b", "b", "a-b", "a+b", "a+b"]),
    "e314": _f(1, ["3b-a", "3b+a", "5b+a", "2b+a", "2b-a"], ["a", "a", "b-a", "a+b", "a+b"]),
}
# all four points at once, and the products with lower-length couples
E["e21"] = _f(-1, ["3a-b", "3a+b", "3b-a", "3b+a"], ["a-b", "a-b", "a+b", "a+b"])
E["e31"] = E["e11"] * E["e23"]
E["e32"] = E["e11"] * E["e25"]
E["e33"] = E["e12"] * E["e22"]
E["e34"] = E["e12"] * E["e24"]

ZERO = None  # marks a fixed point whose Euler class vanishes


@dataclass(frozen=True)
class ReferencePoint:
    name: str
    piA: Partition3D
    piB: Partition3D
    euler: FactoredRational | None

    @property
    def n(self) -> int:
        return 2 * (self.piA.size + self.piB.size)


def _rp(name, piA, piB):
    return ReferencePoint(name, piA, piB, None if name.startswith("zero") else E[name])


REFERENCE_POINTS = [
    _rp("e11", PT, EMPTY),
    _rp("e12", EMPTY, PT),
    # length 4
    _rp("e21", PT, PT),
    _rp("zero4A", col(0, 2), EMPTY),  # (x^2, y, z)
    _rp("zero4B", EMPTY, col(2, 2)),  # (x', y', z'^2)
    _rp("e22", col(1, 2), EMPTY),  # (x, y^2, z)
    _rp("e23", EMPTY, col(0, 2)),
    _rp("e24", col(2, 2), EMPTY),  # (x, y, z^2)
    _rp("e25", EMPTY, col(1, 2)),
    # length 6: products with lower lengths
    _rp("e31", PT, col(0, 2)),
    _rp("e32", PT, col(1, 2)),
    _rp("e33", col(1, 2), PT),
    _rp("e34", col(2, 2), PT),
    _rp("zero6mixA", col(0, 2), PT),
    _rp("zero6mixB", PT, col(2, 2)),
    # length 6: complete intersections
    _rp("zero6A", col(0, 3), EMPTY),  # (x^3, y, z)
    _rp("zero6B", EMPTY, col(2, 3)),
    _rp("e35", col(1, 3), EMPTY),
    _rp("e36", EMPTY, col(0, 3)),
    _rp("e37", col(2, 3), EMPTY),
    _rp("e38", EMPTY, col(1, 3)),
    # length 6: square of a two-variable ideal plus the third variable
    _rp("e39", P([(0, 0, 0), (1, 0, 0), (0, 1, 0)]), EMPTY),  # ((x,y)^2, z)
    _rp("e310", EMPTY, P([(0, 0, 0), (1, 0, 0), (0, 0, 1)])),
    _rp("e311", P([(0, 0, 0), (0, 1, 0), (0, 0, 1)]), EMPTY),  # ((y,z)^2, x)
    _rp("e312", EMPTY, P([(0, 0, 0), (1, 0, 0), (0, 1, 0)])),
    _rp("e313", P([(0, 0, 0), (1, 0, 0), (0, 0, 1)]), EMPTY),  # ((x,z)^2, y)
    _rp("e314", EMPTY, P([(0, 0, 0), (0, 1, 0), (0, 0, 1)])),
]

# A-side partition -> the B-side partition whose Euler class is the a <-> b swap
COUPLE_PARTNER_AXES = (2, 0, 1)
