"""Truncated power series with exact rational coefficients."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

DEFAULT_ORDER = 16


class NonUnitConstantTerm(ArithmeticError):
    pass


@dataclass(frozen=True)
class TruncatedSeries:
    """``sum_{n<=order} coeffs[n] q^n``, known modulo ``q^(order+1)``."""

    order: int
    coeffs: tuple

    def __post_init__(self):
        if self.order < 0:
            raise ValueError("order must be nonnegative")
        cs = [Fraction(c) for c in self.coeffs[: self.order + 1]]
        cs += [Fraction(0)] * (self.order + 1 - len(cs))
        object.__setattr__(self, "coeffs", tuple(cs))

    @classmethod
    def one(cls, order: int) -> TruncatedSeries:
        return cls(order, (1,))

    def __getitem__(self, n: int) -> Fraction:
        if n > self.order:
            raise IndexError(f"coefficient q^{n} beyond truncation order {self.order}")
        return self.coeffs[n]

    def __mul__(self, other: TruncatedSeries) -> TruncatedSeries:
        N = min(self.order, other.order)
        out = [Fraction(0)] * (N + 1)
        for i in range(N + 1):
            ci = self.coeffs[i]
            if ci:
                for j in range(N + 1 - i):
                    out[i + j] += ci * other.coeffs[j]
        return TruncatedSeries(N, tuple(out))

    def __add__(self, other: TruncatedSeries) -> TruncatedSeries:
        N = min(self.order, other.order)
        return TruncatedSeries(N, tuple(self.coeffs[i] + other.coeffs[i] for i in range(N + 1)))

    def __eq__(self, other):
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        N = min(self.order, other.order)
        return self.coeffs[: N + 1] == other.coeffs[: N + 1]

    def reciprocal(self) -> TruncatedSeries:
        if self.coeffs[0] != 1:
            raise NonUnitConstantTerm(f"constant term is {self.coeffs[0]}, expected 1")
        N = self.order
        inv = [Fraction(1)] + [Fraction(0)] * N
        for n in range(1, N + 1):
            inv[n] = -sum(self.coeffs[k] * inv[n - k] for k in range(1, n + 1))
        return TruncatedSeries(N, tuple(inv))

    def ints(self) -> list:
        return [int(c) if c.denominator == 1 else str(c) for c in self.coeffs]


def macmahon(N: int) -> TruncatedSeries:
    """Truncation of ``prod_{n>=1} (1 - q^n)^(-n)`` to order ``N``."""
    out = TruncatedSeries.one(N)
    for n in range(1, N + 1):
        # (1 - q^n)^(-1) = sum_k q^(nk)
        geom = TruncatedSeries(N, tuple(1 if i % n == 0 else 0 for i in range(N + 1)))
        for _ in range(n):
            out = out * geom
    return out


def series_pow(s: TruncatedSeries, k: int) -> TruncatedSeries:
    if k < 0:
        s, k = s.reciprocal(), -k
    out = TruncatedSeries.one(s.order)
    base = s
    while k:
        if k & 1:
            out = out * base
        base = base * base
        k >>= 1
    return out


def substitute(s: TruncatedSeries, which: str) -> TruncatedSeries:
    """``neg_q``: q -> -q.  ``neg_q_squared``: q -> -q^2 (order doubles)."""
    if which == "neg_q":
        return TruncatedSeries(s.order, tuple(c if n % 2 == 0 else -c for n, c in enumerate(s.coeffs)))
    if which == "neg_q_squared":
        out = [Fraction(0)] * (2 * s.order + 1)
        for n, c in enumerate(s.coeffs):
            out[2 * n] = c if n % 2 == 0 else -c
        return TruncatedSeries(2 * s.order, tuple(out))
    raise ValueError(f"unknown substitution {which!r}")


def classical_series(order: int = DEFAULT_ORDER) -> TruncatedSeries:
    """``M(-q)^(-20)``: the degree-zero DT series of P^3."""
    return series_pow(substitute(macmahon(order), "neg_q"), -20)


def conjectural_series(order: int = DEFAULT_ORDER, exponent: int = -10) -> TruncatedSeries:
    """``M(-q^2)^exponent`` truncated at ``q^order``."""
    m = macmahon(order // 2)
    return series_pow(substitute(m, "neg_q_squared"), exponent)


def coefficients(s: TruncatedSeries, upto: int | None = None) -> list:
    upto = s.order if upto is None else upto
    return [s[n] for n in range(upto + 1)]


def from_list(cs: Sequence) -> TruncatedSeries:
    return TruncatedSeries(len(cs) - 1, tuple(cs))
