"""Euler-class contributions of isolated fixed points.

Quadratic pipeline
------------------
The U0-side part ``V`` of the Ext^1 - Ext^2 trace of a sigma-invariant ideal
is read weight by weight.  A weight ``m`` with positive multiplicity is an
Ext^1 (denominator) direction, negative multiplicity an Ext^2 (numerator)
direction; together with its partner ``-m`` on the other chart it spans one
rank-two summand ``rho_|m|``.  Its Euler class is

    orientation_sign * magnitude_sign * (|m| * p^*e       if |m| odd,
                                         |m|/2 * e(T)     if |m| even)

where ``magnitude_sign`` comes from |m| mod 4 (+ for 1, 2 and - for 3, 0) and
``orientation_sign`` is -1 exactly for even negative weights.  The degree-two
generators p^*e and e(T) cancel between numerator and denominator, and what
is left is a rational function of (a, b).

Classical pipeline
------------------
Plain torus weights: product of Ext^2 weights over product of Ext^1 weights.
"""
from __future__ import annotations

import contextlib
from dataclasses import dataclass, field
from fractions import Fraction

from .algebra import FactoredRational, LinearForm, VirtualCharacter

# |m| mod 4 -> sign in the Euler class of the rank-two bundle attached to m
MAGNITUDE_SIGN = {1: 1, 2: 1, 3: -1, 0: -1}

TRIVIAL_EXT2 = "trivial Ext^2 subrepresentation (weight 0 in the numerator)"


class NonIsolatedFixedPoint(ArithmeticError):
    """A weight-0 direction in Ext^1: the fixed point moves in a family."""

    def __init__(self, message, points=()):
        super().__init__(message)
        self.points = list(points)


class TorsionMismatch(ArithmeticError):
    pass


# sign attached to an even negative U0-side weight; +1 disables the orientation rule
EVEN_NEGATIVE_SIGN = {"value": -1}


@contextlib.contextmanager
def corrupted_signs(kind: str = "orientation", table: dict[int, int] | None = None):
    """Temporarily break a sign rule (negative control for ``verify``).

    ``kind="orientation"`` drops the even-negative-weight sign.
    ``kind="table"`` replaces the mod-4 table, by default flipping the entry for 2.
    """
    saved_table, saved_orient = dict(MAGNITUDE_SIGN), EVEN_NEGATIVE_SIGN["value"]
    if kind == "orientation":
        EVEN_NEGATIVE_SIGN["value"] = 1
    elif kind == "table":
        MAGNITUDE_SIGN.update(table if table is not None else {2: -1})
    else:
        raise ValueError(f"unknown corruption {kind!r}")
    try:
        yield
    finally:
        MAGNITUDE_SIGN.clear()
        MAGNITUDE_SIGN.update(saved_table)
        EVEN_NEGATIVE_SIGN["value"] = saved_orient


@dataclass(frozen=True)
class EulerFactor:
    weight: LinearForm
    orientation_sign: int
    magnitude_sign: int
    half: bool
    etor: bool

    @classmethod
    def of(cls, m: LinearForm, params) -> EulerFactor:
        sign = params.sign(m)
        residue = params.residue(m)
        even = residue % 2 == 0
        mag_residue = residue if sign > 0 else (-residue) % 4
        return cls(
            weight=m,
            orientation_sign=EVEN_NEGATIVE_SIGN["value"] if (even and sign < 0) else 1,
            magnitude_sign=MAGNITUDE_SIGN[mag_residue],
            half=even,
            etor=even,
        )

    def scalar_and_form(self, params) -> tuple[Fraction, LinearForm]:
        """Value as ``c * f`` with ``f`` a linear form (|m| written as +-m)."""
        c = Fraction(self.orientation_sign * self.magnitude_sign * params.sign(self.weight))
        if self.half:
            c /= 2
        return c, self.weight


@dataclass
class Contribution:
    point: object
    euler: FactoredRational
    diagnostics: str = ""
    factors: dict = field(default_factory=dict)

    @property
    def is_zero(self) -> bool:
        return self.euler.is_zero()


@dataclass(frozen=True)
class EulerData:
    """Full record of one quadratic Euler-class computation."""

    euler: FactoredRational
    numerator: tuple[EulerFactor, ...]
    denominator: tuple[EulerFactor, ...]
    zero_reason: str = ""


def split_trace(trace: VirtualCharacter) -> tuple[list[LinearForm], list[LinearForm]]:
    """(Ext^1 weights, Ext^2 weights) as multisets after cancellation."""
    ext1, ext2 = [], []
    for w, m in trace.items():
        (ext1 if m > 0 else ext2).extend([w] * abs(m))
    return ext1, ext2


def quadratic_euler_data(u0_part: VirtualCharacter, params, label: str = "") -> EulerData:
    ext1, ext2 = split_trace(u0_part)
    arity = 2
    zero_w = LinearForm.zero(arity)
    if zero_w in ext1:
        raise NonIsolatedFixedPoint(
            f"weight 0 in Ext^1 of {label or 'fixed point'}: non-isolated fixed locus", [label] if label else [])
    if len(ext1) != len(ext2):
        raise AssertionError(f"rank imbalance {len(ext1)} vs {len(ext2)} at {label}")
    if zero_w in ext2:
        return EulerData(FactoredRational.zero(arity), (), (), TRIVIAL_EXT2)

    num = tuple(EulerFactor.of(m, params) for m in ext2)
    den = tuple(EulerFactor.of(m, params) for m in ext1)
    if sum(f.etor for f in num) != sum(f.etor for f in den):
        raise TorsionMismatch(
            f"e(T) markers: {sum(f.etor for f in num)} in Ext^2, {sum(f.etor for f in den)} in Ext^1 at {label}")

    scalar = Fraction(1)
    facs = []
    for f in num:
        c, w = f.scalar_and_form(params)
        scalar *= c
        facs.append((w, 1))
    for f in den:
        c, w = f.scalar_and_form(params)
        scalar /= c
        facs.append((w, -1))
    return EulerData(FactoredRational(scalar, facs, arity), num, den)


def quadratic_euler(u0_part: VirtualCharacter, params) -> FactoredRational:
    """Euler-class ratio e(Ext^2)/e(Ext^1) of one fixed couple.

    ``params`` is a :class:`~quaddt.algebra.ParamChoice` or a
    :class:`~quaddt.algebra.Region`; either decides the sign and the residue
    mod 4 of every weight.
    """
    return quadratic_euler_data(u0_part, params).euler


def classical_euler(chart_trace: VirtualCharacter) -> FactoredRational:
    arity = chart_trace.arity or 4
    ext1, ext2 = split_trace(chart_trace)
    zero_w = LinearForm.zero(arity)
    if zero_w in ext1:
        raise NonIsolatedFixedPoint("weight 0 in Ext^1")
    if zero_w in ext2:
        return FactoredRational.zero(arity)
    return FactoredRational(1, [(w, 1) for w in ext2] + [(w, -1) for w in ext1], arity)


def pair_product(cA: FactoredRational, cB: FactoredRational) -> FactoredRational:
    return cA * cB
