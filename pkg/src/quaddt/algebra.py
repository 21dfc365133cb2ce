"""Exact arithmetic kernel.

Linear forms over a fixed parameter list, virtual characters (finite Laurent
expressions in ``t`` whose exponents are linear forms), expanded integer
polynomials and factored rational functions.  Everything is exact; nothing in
this module ever touches a float.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from math import gcd, lcm
from typing import Iterable, Mapping, Sequence

QUADRATIC_NAMES = ("a", "b")
CLASSICAL_NAMES = ("l0", "l1", "l2", "l3")


class ArityError(ValueError):
    pass


class NotConstant(ArithmeticError):
    pass


class DegenerateParameters(ZeroDivisionError):
    """A denominator (or a weight whose sign matters) vanishes at the chosen parameters."""


def _check_arity(x, y):
    if x.arity != y.arity:
        raise ArityError(f"arity mismatch: {x.arity} vs {y.arity}")


# ---------------------------------------------------------------------------
# LinearForm


@dataclass(frozen=True, order=True)
class LinearForm:
    coeffs: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "coeffs", tuple(int(c) for c in self.coeffs))

    @classmethod
    def zero(cls, arity: int) -> LinearForm:
        return cls((0,) * arity)

    @classmethod
    def basis(cls, arity: int, i: int) -> LinearForm:
        return cls(tuple(int(j == i) for j in range(arity)))

    @classmethod
    def parse(cls, text: str, names: Sequence[str] = QUADRATIC_NAMES) -> LinearForm:
        """Parse strings such as ``"3a-b"``, ``"-2a"``, ``"l1-l0"`` or ``"0"``."""
        s = text.replace(" ", "").replace("−", "-")
        coeffs = [0] * len(names)
        if s in ("", "0"):
            return cls(tuple(coeffs))
        # longest names first so "l1" is not read as "l" + "1"
        alt = "|".join(sorted(map(re.escape, names), key=len, reverse=True))
        pos = 0
        for m in re.finditer(rf"([+-]?)(\d*)({alt})", s):
            if m.start() != pos:
                raise ValueError(f"cannot parse linear form {text!r}")
            c = int(m.group(2)) if m.group(2) else 1
            coeffs[names.index(m.group(3))] += -c if m.group(1) == "-" else c
            pos = m.end()
        if pos != len(s):
            raise ValueError(f"cannot parse linear form {text!r}")
        return cls(tuple(coeffs))

    @property
    def arity(self) -> int:
        return len(self.coeffs)

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def __add__(self, other: LinearForm) -> LinearForm:
        _check_arity(self, other)
        return LinearForm(tuple(x + y for x, y in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other: LinearForm) -> LinearForm:
        _check_arity(self, other)
        return LinearForm(tuple(x - y for x, y in zip(self.coeffs, other.coeffs)))

    def __neg__(self) -> LinearForm:
        return LinearForm(tuple(-x for x in self.coeffs))

    def __rmul__(self, k: int) -> LinearForm:
        return LinearForm(tuple(k * x for x in self.coeffs))

    def __mul__(self, k: int) -> LinearForm:
        return self.__rmul__(k)

    def eval(self, values: Sequence) -> int | Fraction:
        if len(values) != self.arity:
            raise ArityError(f"form of arity {self.arity} evaluated at {len(values)} values")
        return sum((c * v for c, v in zip(self.coeffs, values)), 0)

    def orientation(self) -> int:
        """Sign of the first nonzero coefficient (0 for the zero form)."""
        for c in self.coeffs:
            if c:
                return 1 if c > 0 else -1
        return 0

    def canonical(self) -> tuple[LinearForm, int]:
        """Return ``(f', s)`` with ``self == s * f'`` and f' canonically oriented."""
        s = self.orientation()
        return (self, 1) if s >= 0 else (-self, -1)

    def primitive(self) -> tuple[LinearForm, int]:
        """Return ``(f', c)`` with ``self == c * f'``, f' primitive and canonically oriented."""
        g = gcd(*self.coeffs)
        if g == 0:
            return self, 1
        f, s = LinearForm(tuple(c // g for c in self.coeffs)).canonical()
        return f, s * g

    def swap(self, perm: Sequence[int]) -> LinearForm:
        """Relabel parameters: coefficient of parameter ``i`` moves to ``perm[i]``."""
        out = [0] * self.arity
        for i, c in enumerate(self.coeffs):
            out[perm[i]] = c
        return LinearForm(tuple(out))

    def format(self, names: Sequence[str] | None = None) -> str:
        names = names or (QUADRATIC_NAMES if self.arity == 2 else CLASSICAL_NAMES)
        parts = []
        for c, n in zip(self.coeffs, names):
            if not c:
                continue
            mag = "" if abs(c) == 1 else str(abs(c))
            sign = "-" if c < 0 else ("+" if parts else "")
            parts.append(f"{sign}{mag}{n}")
        return "".join(parts) or "0"

    def __str__(self):
        return self.format()


def lf_eval(f: LinearForm, p) -> int | Fraction:
    """Evaluate ``f`` at a ParamChoice (or any object with ``.values``) or a plain tuple."""
    values = getattr(p, "values", p)
    return f.eval(tuple(values))


# ---------------------------------------------------------------------------
# VirtualCharacter


class VirtualCharacter:
    """Finite signed multiset of weights, i.e. ``sum_w m_w t^w``.

    Instances are immutable; zero multiplicities are never stored.
    """

    __slots__ = ("_terms", "_arity", "_hash")

    def __init__(self, terms: Mapping[LinearForm, int] | Iterable[tuple[LinearForm, int]] = (), arity: int | None = None):
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[LinearForm, int] = {}
        for w, m in items:
            if arity is None:
                arity = w.arity
            elif w.arity != arity:
                raise ArityError(f"arity mismatch: {w.arity} vs {arity}")
            acc[w] = acc.get(w, 0) + int(m)
        self._terms = {w: m for w, m in sorted(acc.items()) if m}
        self._arity = arity
        self._hash = None

    @classmethod
    def monomial(cls, w: LinearForm, m: int = 1) -> VirtualCharacter:
        return cls({w: m}, arity=w.arity)

    @classmethod
    def one(cls, arity: int) -> VirtualCharacter:
        return cls.monomial(LinearForm.zero(arity))

    @property
    def arity(self) -> int | None:
        return self._arity

    @property
    def terms(self) -> dict[LinearForm, int]:
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def __len__(self):
        return len(self._terms)

    def __bool__(self):
        return bool(self._terms)

    def __getitem__(self, w: LinearForm) -> int:
        return self._terms.get(w, 0)

    def __eq__(self, other):
        if not isinstance(other, VirtualCharacter):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(tuple(self._terms.items()))
        return self._hash

    def _arity_with(self, other: VirtualCharacter) -> int | None:
        if self._arity is not None and other._arity is not None and self._arity != other._arity:
            raise ArityError(f"arity mismatch: {self._arity} vs {other._arity}")
        return self._arity if self._arity is not None else other._arity

    def __add__(self, other: VirtualCharacter) -> VirtualCharacter:
        ar = self._arity_with(other)
        return VirtualCharacter(list(self._terms.items()) + list(other._terms.items()), arity=ar)

    def __neg__(self) -> VirtualCharacter:
        return VirtualCharacter({w: -m for w, m in self._terms.items()}, arity=self._arity)

    def __sub__(self, other: VirtualCharacter) -> VirtualCharacter:
        return self + (-other)

    def __mul__(self, other: VirtualCharacter) -> VirtualCharacter:
        ar = self._arity_with(other)
        acc: dict[LinearForm, int] = {}
        for w1, m1 in self._terms.items():
            for w2, m2 in other._terms.items():
                w = w1 + w2
                acc[w] = acc.get(w, 0) + m1 * m2
        return VirtualCharacter(acc, arity=ar)

    def shift(self, w: LinearForm) -> VirtualCharacter:
        """Multiply by the monomial ``t^w``."""
        return VirtualCharacter({v + w: m for v, m in self._terms.items()}, arity=self._arity)

    def invert(self) -> VirtualCharacter:
        return VirtualCharacter({-w: m for w, m in self._terms.items()}, arity=self._arity)

    def rank(self) -> int:
        """Signed total multiplicity (the virtual dimension)."""
        return sum(self._terms.values())

    def positive_part(self) -> dict[LinearForm, int]:
        return {w: m for w, m in self._terms.items() if m > 0}

    def negative_part(self) -> dict[LinearForm, int]:
        return {w: -m for w, m in self._terms.items() if m < 0}

    def map_weights(self, fn) -> VirtualCharacter:
        return VirtualCharacter([(fn(w), m) for w, m in self._terms.items()], arity=self._arity)

    def format(self, names=None) -> str:
        if not self._terms:
            return "0"
        out = []
        for w, m in self._terms.items():
            mon = "1" if w.is_zero() else f"t^({w.format(names)})"
            coef = "" if abs(m) == 1 else f"{abs(m)}"
            out.append(("- " if m < 0 else "+ ") + coef + mon)
        s = " ".join(out)
        return s[2:] if s.startswith("+ ") else s

    def __repr__(self):
        return f"VirtualCharacter({self.format()})"


def char_mul(x: VirtualCharacter, y: VirtualCharacter) -> VirtualCharacter:
    return x * y


def char_invert(x: VirtualCharacter) -> VirtualCharacter:
    return x.invert()


# ---------------------------------------------------------------------------
# Polynomial


class Polynomial:
    """Expanded multivariate polynomial with integer coefficients."""

    __slots__ = ("_terms", "arity")

    def __init__(self, terms: Mapping[tuple[int, ...], int] | None = None, arity: int = 2):
        self.arity = arity
        self._terms = {}
        for e, c in (terms or {}).items():
            if len(e) != arity:
                raise ArityError(f"exponent {e} has wrong arity for {arity}")
            if c:
                self._terms[tuple(e)] = c

    @classmethod
    def const(cls, c: int, arity: int) -> Polynomial:
        return cls({(0,) * arity: c}, arity)

    @classmethod
    def from_linear_form(cls, f: LinearForm) -> Polynomial:
        n = f.arity
        return cls({tuple(int(j == i) for j in range(n)): c for i, c in enumerate(f.coeffs) if c}, n)

    @property
    def terms(self) -> dict[tuple[int, ...], int]:
        return dict(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def __eq__(self, other):
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.arity == other.arity and self._terms == other._terms

    def __hash__(self):
        return hash((self.arity, tuple(sorted(self._terms.items()))))

    def _coerce(self, other) -> Polynomial:
        if isinstance(other, int):
            return Polynomial.const(other, self.arity)
        if other.arity != self.arity:
            raise ArityError(f"arity mismatch: {self.arity} vs {other.arity}")
        return other

    def __add__(self, other) -> Polynomial:
        other = self._coerce(other)
        acc = dict(self._terms)
        for e, c in other._terms.items():
            acc[e] = acc.get(e, 0) + c
        return Polynomial(acc, self.arity)

    __radd__ = __add__

    def __neg__(self) -> Polynomial:
        return Polynomial({e: -c for e, c in self._terms.items()}, self.arity)

    def __sub__(self, other) -> Polynomial:
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> Polynomial:
        return (-self) + other

    def __mul__(self, other) -> Polynomial:
        other = self._coerce(other)
        acc: dict[tuple[int, ...], int] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                e = tuple(x + y for x, y in zip(e1, e2))
                acc[e] = acc.get(e, 0) + c1 * c2
        return Polynomial(acc, self.arity)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> Polynomial:
        if k < 0:
            raise ValueError("negative power of a polynomial")
        out = Polynomial.const(1, self.arity)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def eval(self, values: Sequence):
        total = 0
        for e, c in self._terms.items():
            term = c
            for v, k in zip(values, e):
                term *= v ** k
            total += term
        return total

    def __repr__(self):
        return f"Polynomial({self._terms!r})"


# ---------------------------------------------------------------------------
# FactoredRational


class FactoredRational:
    """``scalar * prod(f ** k)`` with primitive, canonically oriented linear-form factors.

    A factor's integer content and orientation sign are absorbed into ``scalar``,
    so equal rational functions written with the same linear factors compare equal.

    The zero element has scalar 0 and no factors.
    """

    __slots__ = ("scalar", "factors", "arity")

    def __init__(self, scalar=1, factors: Mapping[LinearForm, int] | Iterable[tuple[LinearForm, int]] = (), arity: int = 2):
        scalar = Fraction(scalar)
        acc: dict[LinearForm, int] = {}
        items = factors.items() if isinstance(factors, Mapping) else factors
        for f, k in items:
            if f.arity != arity:
                raise ArityError(f"factor arity {f.arity} does not match {arity}")
            if not k:
                continue
            if f.is_zero():
                if k > 0:
                    scalar = Fraction(0)
                    continue
                raise DegenerateParameters("zero linear form in a denominator")
            g, c = f.primitive()
            scalar *= Fraction(c) ** k
            acc[g] = acc.get(g, 0) + k
        self.arity = arity
        self.scalar = scalar
        if scalar == 0:
            self.factors = ()
        else:
            self.factors = tuple(sorted((f, k) for f, k in acc.items() if k))

    @classmethod
    def zero(cls, arity: int = 2) -> FactoredRational:
        return cls(0, (), arity)

    @classmethod
    def one(cls, arity: int = 2) -> FactoredRational:
        return cls(1, (), arity)

    @classmethod
    def build(cls, scalar=1, num: Iterable[str] = (), den: Iterable[str] = (), names=QUADRATIC_NAMES) -> FactoredRational:
        """Convenience constructor from textual factors, e.g. ``build(1, ["3a-b"], ["a-b"])``."""
        facs = [(LinearForm.parse(s, names), 1) for s in num] + [(LinearForm.parse(s, names), -1) for s in den]
        return cls(scalar, facs, arity=len(names))

    def is_zero(self) -> bool:
        return self.scalar == 0

    def __eq__(self, other):
        if not isinstance(other, FactoredRational):
            return NotImplemented
        return (self.arity, self.scalar, self.factors) == (other.arity, other.scalar, other.factors)

    def __hash__(self):
        return hash((self.arity, self.scalar, self.factors))

    def __mul__(self, other: FactoredRational) -> FactoredRational:
        if self.arity != other.arity:
            raise ArityError(f"arity mismatch: {self.arity} vs {other.arity}")
        return FactoredRational(self.scalar * other.scalar, list(self.factors) + list(other.factors), self.arity)

    def reciprocal(self) -> FactoredRational:
        if self.is_zero():
            raise ZeroDivisionError("reciprocal of zero")
        return FactoredRational(1 / self.scalar, [(f, -k) for f, k in self.factors], self.arity)

    def numerator_factors(self) -> dict[LinearForm, int]:
        return {f: k for f, k in self.factors if k > 0}

    def denominator_factors(self) -> dict[LinearForm, int]:
        return {f: -k for f, k in self.factors if k < 0}

    def evaluate(self, values: Sequence) -> Fraction:
        values = tuple(getattr(values, "values", values))
        if self.is_zero():
            return Fraction(0)
        out = Fraction(self.scalar)
        for f, k in self.factors:
            v = f.eval(values)
            if v == 0:
                if k < 0:
                    raise DegenerateParameters(f"denominator factor {f} vanishes at {values}")
                return Fraction(0)
            out *= Fraction(v) ** k
        return out

    def swap(self, perm: Sequence[int]) -> FactoredRational:
        return FactoredRational(self.scalar, [(f.swap(perm), k) for f, k in self.factors], self.arity)

    def to_polynomials(self) -> tuple[Polynomial, Polynomial, Fraction]:
        """Return ``(P, Q, c)`` with self == c * P / Q and P, Q integer polynomials."""
        num = Polynomial.const(1, self.arity)
        den = Polynomial.const(1, self.arity)
        for f, k in self.factors:
            p = Polynomial.from_linear_form(f) ** abs(k)
            if k > 0:
                num = num * p
            else:
                den = den * p
        return num, den, self.scalar

    def format(self, names=None) -> str:
        if self.is_zero():
            return "0"

        def prod(fs):
            out = []
            for f, k in sorted(fs.items()):
                if sum(1 for c in f.coeffs if c) == 1 and f.coeffs[[i for i, c in enumerate(f.coeffs) if c][0]] == 1:
                    base = f.format(names)
                else:
                    base = f"({f.format(names)})"
                out.append(base + (f"^{k}" if k != 1 else ""))
            return "*".join(out)

        s = self.scalar
        num_s = prod(self.numerator_factors())
        coef = abs(s.numerator)
        if num_s:
            num_s = (f"{coef}*" if coef != 1 else "") + num_s
        else:
            num_s = str(coef)
        den_fac = prod(self.denominator_factors())
        den_parts = [p for p in ((str(s.denominator) if s.denominator != 1 else ""), den_fac) if p]
        sign = "-" if s < 0 else ""
        if not den_parts:
            return sign + num_s
        den_s = "*".join(den_parts)
        if len(den_parts) > 1 or "*" in den_s:
            den_s = f"({den_s})"
        return f"{sign}{num_s}/{den_s}"

    def __str__(self):
        return self.format()

    def __repr__(self):
        return f"FactoredRational({self.format()})"


# ---------------------------------------------------------------------------
# Summation


def _default_probe_points(arity: int):
    if arity == 2:
        # valid (a, b) parameter choices, tried in order until no denominator vanishes
        yield from [(7, 1), (9, 1), (11, 1), (13, 1), (17, 3), (19, 3), (101, 7), (1009, 37)]
    else:
        yield from [(0, 1, 17, 65), (0, 3, 29, 131), (2, 41, 113, 977)][: 3]
        yield from [tuple(p ** (i + 1) for i in range(arity)) for p in (101, 1009, 10007)]


def rf_sum_to_constant(contribs: Sequence[FactoredRational], mode: str = "symbolic", p=None) -> Fraction:
    """Sum factored rational functions that are expected to add up to a constant.

    ``mode="numeric"`` evaluates every term at ``p`` and sums exactly.
    ``mode="symbolic"`` takes a candidate constant from one evaluation and then
    proves it by the polynomial identity ``N - c * D == 0`` over the common
    denominator.  Raises :class:`NotConstant` if the identity fails.
    """
    contribs = [r for r in contribs if not r.is_zero()]
    if mode == "numeric":
        if p is None:
            raise ValueError("numeric mode needs a parameter choice")
        return sum((r.evaluate(p) for r in contribs), Fraction(0))
    if mode != "symbolic":
        raise ValueError(f"unknown mode {mode!r}")
    if not contribs:
        return Fraction(0)
    arity = contribs[0].arity
    if any(r.arity != arity for r in contribs):
        raise ArityError("mixed arities in sum")

    common: dict[LinearForm, int] = {}
    for r in contribs:
        for f, k in r.denominator_factors().items():
            common[f] = max(common.get(f, 0), k)
    scale = reduce(lcm, (r.scalar.denominator for r in contribs), 1)

    den = Polynomial.const(scale, arity)
    for f, k in common.items():
        den = den * Polynomial.from_linear_form(f) ** k
    num = Polynomial({}, arity)
    for r in contribs:
        term = Polynomial.const(int(r.scalar * scale), arity)
        for f, k in r.numerator_factors().items():
            term = term * Polynomial.from_linear_form(f) ** k
        rd = r.denominator_factors()
        for f, k in common.items():
            extra = k - rd.get(f, 0)
            if extra:
                term = term * Polynomial.from_linear_form(f) ** extra
        num = num + term

    for pt in (p,) if p is not None else _default_probe_points(arity):
        d = den.eval(pt)
        if d:
            c = Fraction(num.eval(pt), d)
            break
    else:
        raise DegenerateParameters("no probe point avoids the common denominator")

    if not (num * c.denominator - den * c.numerator).is_zero():
        raise NotConstant(f"sum is not constant (candidate {c})")
    return c


# ---------------------------------------------------------------------------
# Parameter choices for the quadratic pipeline

NONDEGENERATE_FORMS = tuple(LinearForm.parse(s) for s in ("a", "b", "3a-b", "3b-a", "3a+b", "3b+a", "a-b", "a+b"))


class InvalidParams(ValueError):
    pass


class UndecidedSign(ValueError):
    """The sign of a weight is not fixed by the region a > 5b > 0."""


@dataclass(frozen=True)
class ParamChoice:
    """Odd integers ``a > 5b > 0`` for the torus action on P^3."""

    a: int
    b: int

    def __post_init__(self):
        a, b = self.a, self.b
        if a % 2 == 0 or b % 2 == 0:
            raise InvalidParams(f"a and b must be odd, got ({a},{b})")
        if not a > 5 * b > 0:
            raise InvalidParams(f"need a > 5b > 0, got ({a},{b})")
        for f in NONDEGENERATE_FORMS:
            if f.eval(self.values) == 0:
                raise InvalidParams(f"{f} vanishes at ({a},{b})")

    @property
    def values(self) -> tuple[int, int]:
        return (self.a, self.b)

    @property
    def region(self) -> Region:
        return Region(self.a % 4, self.b % 4)

    def value(self, f: LinearForm) -> int:
        return f.eval(self.values)

    def sign(self, f: LinearForm) -> int:
        v = self.value(f)
        if v == 0:
            raise DegenerateParameters(f"weight {f} vanishes at ({self.a},{self.b})")
        return 1 if v > 0 else -1

    def residue(self, f: LinearForm) -> int:
        return self.value(f) % 4

    def __str__(self):
        return f"({self.a},{self.b})"


@dataclass(frozen=True)
class Region:
    """Symbolic region: a > 5b > 0 with ``(a, b)`` in a fixed class mod 4."""

    a_mod4: int
    b_mod4: int

    def __post_init__(self):
        if self.a_mod4 not in (1, 3) or self.b_mod4 not in (1, 3):
            raise InvalidParams("a and b are odd, so their residues mod 4 are 1 or 3")

    def sign(self, f: LinearForm) -> int:
        # the open cone a > 5b > 0 is spanned by the rays (1, 0) and (5, 1)
        if f.arity != 2:
            raise ArityError("regions only apply to (a, b) forms")
        c1, c2 = f.coeffs
        r1, r2 = c1, 5 * c1 + c2
        if r1 >= 0 and r2 >= 0 and (r1 or r2):
            return 1
        if r1 <= 0 and r2 <= 0 and (r1 or r2):
            return -1
        raise UndecidedSign(f"sign of {f} is not determined by a > 5b > 0")

    def residue(self, f: LinearForm) -> int:
        c1, c2 = f.coeffs
        return (c1 * self.a_mod4 + c2 * self.b_mod4) % 4

    def __str__(self):
        return f"a={self.a_mod4},b={self.b_mod4} mod 4"


ALL_REGIONS = tuple(Region(x, y) for x in (1, 3) for y in (1, 3))
