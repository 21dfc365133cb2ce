"""Chart tangent weights and the degree-zero vertex formula for Ext^1 - Ext^2."""
from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

from .algebra import LinearForm, VirtualCharacter
from .partitions import Partition3D, q_poly, sigma_transpose

A, B = "A", "B"
COUPLES = (A, B)
# chart pairs swapped by sigma; the first chart is the one partitions live on
COUPLE_CHARTS = {A: (0, 1), B: (2, 3)}
COUPLE_VARIABLES = {A: ("x", "y", "z"), B: ("x'", "y'", "z'")}


class SymmetryViolation(AssertionError):
    pass


class ChartWeights(NamedTuple):
    s1: LinearForm
    s2: LinearForm
    s3: LinearForm

    @property
    def arity(self) -> int:
        return self.s1.arity

    def total(self) -> LinearForm:
        return self.s1 + self.s2 + self.s3


def _lf(*c):
    return LinearForm(c)


# exponents of t for the torus element diag(t, 1/t) acting by
# [X0:X1:X2:X3] -> [t^a X0 : t^-a X1 : t^b X2 : t^-b X3]
_QUADRATIC = {
    0: ChartWeights(_lf(-2, 0), _lf(-1, 1), _lf(-1, -1)),
    1: ChartWeights(_lf(2, 0), _lf(1, 1), _lf(1, -1)),
    2: ChartWeights(_lf(1, -1), _lf(-1, -1), _lf(0, -2)),
    3: ChartWeights(_lf(1, 1), _lf(-1, 1), _lf(0, 2)),
}


def chart_weights_quadratic(chart: int) -> ChartWeights:
    try:
        return _QUADRATIC[chart]
    except KeyError:
        raise ValueError(f"chart must be 0..3, got {chart!r}") from None


def chart_weights_classical(chart: int) -> ChartWeights:
    """Weights ``l_j - l_i`` (j != i, increasing) of the coordinates X_j/X_i on U_i."""
    if chart not in range(4):
        raise ValueError(f"chart must be 0..3, got {chart!r}")
    return ChartWeights(*(LinearForm.basis(4, j) - LinearForm.basis(4, chart) for j in range(4) if j != chart))


def vertex_trace(Q: VirtualCharacter, s: ChartWeights) -> VirtualCharacter:
    """Trace of Ext^1 - Ext^2 on one chart from the quotient character ``Q``.

    (s1 s2 s3 Q - Qbar + Q Qbar (1-s1)(1-s2)(1-s3)) / (s1 s2 s3), where the
    division is an exponent shift.
    """
    n = s.arity
    if Q.arity is not None and Q.arity != n:
        raise ValueError(f"arity mismatch: Q has {Q.arity}, weights have {n}")
    one = VirtualCharacter.one(n)
    total = s.total()
    Qbar = Q.invert()
    koszul = one
    for w in s:
        koszul = koszul * (one - VirtualCharacter.monomial(w))
    expr = Q.shift(total) - Qbar + Q * Qbar * koszul
    return expr.shift(-total)


@dataclass(frozen=True)
class CoupleTrace:
    full: VirtualCharacter
    u0_part: VirtualCharacter
    partner_part: VirtualCharacter


def couple_trace(pi: Partition3D, couple: str = A) -> CoupleTrace:
    """Trace over both charts of a fixed couple for the sigma-invariant ideal given by ``pi``.

    ``pi`` lives on the first chart of the couple (U0 for A, U2 for B).  The
    partner chart is computed on its own and checked against the t -> 1/t
    image of the first; the full trace must have virtual rank 0.
    """
    c0, c1 = COUPLE_CHARTS[couple]
    w0, w1 = chart_weights_quadratic(c0), chart_weights_quadratic(c1)
    u0 = vertex_trace(q_poly(pi, w0), w0)
    u1 = vertex_trace(q_poly(sigma_transpose(pi, couple), w1), w1)
    if u1 != u0.invert():
        raise SymmetryViolation(f"couple {couple}, {pi}: partner chart trace is not the inverse of the first")
    full = u0 + u1
    if full.rank() != 0:
        raise SymmetryViolation(f"couple {couple}, {pi}: virtual rank {full.rank()} != 0")
    return CoupleTrace(full, u0, u1)
