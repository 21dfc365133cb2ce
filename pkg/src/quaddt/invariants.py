"""Fixed-point sums: quadratic invariants of P^3, classical DT invariants, series comparison."""
from __future__ import annotations

import itertools
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Sequence

from .algebra import (
    ALL_REGIONS,
    DegenerateParameters,
    FactoredRational,
    ParamChoice,
    Region,
    rf_sum_to_constant,
)
from .euler import (
    EulerData,
    NonIsolatedFixedPoint,
    classical_euler,
    pair_product,
    quadratic_euler_data,
)
from .partitions import Partition3D, enumerate_partitions, q_poly
from .series import DEFAULT_ORDER, classical_series, conjectural_series
from .vertex import A, B, COUPLE_VARIABLES, chart_weights_classical, couple_trace, vertex_trace

MAX_ISOLATED_N = 6
DEFAULT_PARAMS = ParamChoice(7, 1)
DEFAULT_LAMBDAS = (0, 1, 17, 65)
CONJECTURE_EXPONENT = -10


class OddLength(ValueError):
    pass


class Disagreement(AssertionError):
    pass


class NonInteger(ArithmeticError):
    pass


@dataclass(frozen=True)
class FixedPoint:
    """sigma-invariant monomial ideal: ``piA`` on U0 (couple A), ``piB`` on U2 (couple B)."""

    piA: Partition3D
    piB: Partition3D

    @property
    def n(self) -> int:
        return 2 * (self.piA.size + self.piB.size)

    def describe(self) -> str:
        parts = []
        if self.piA.size:
            parts.append(f"{self.piA.ideal_str(COUPLE_VARIABLES[A])} on U0")
        if self.piB.size:
            parts.append(f"{self.piB.ideal_str(COUPLE_VARIABLES[B])} on U2")
        return " + ".join(parts) or "empty subscheme"


@dataclass(frozen=True)
class ClassicalFixedPoint:
    charts: tuple[Partition3D, Partition3D, Partition3D, Partition3D]

    @property
    def n(self) -> int:
        return sum(p.size for p in self.charts)


def enumerate_fixed_points(n: int) -> list[FixedPoint]:
    """All N_S-fixed points of length ``n``: couple-A part largest first, then enumeration order."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    if n % 2:
        raise OddLength(f"no N_S-fixed subschemes of odd length {n}")
    half = n // 2
    out = []
    for k in range(half, -1, -1):
        for pa in enumerate_partitions(k):
            for pb in enumerate_partitions(half - k):
                out.append(FixedPoint(pa, pb))
    return out


def _couple_data(pi: Partition3D, couple: str, params) -> EulerData:
    if pi.size == 0:
        return EulerData(FactoredRational.one(2), (), ())
    label = f"{pi.ideal_str(COUPLE_VARIABLES[couple])} on {'U0' if couple == A else 'U2'}"
    return quadratic_euler_data(couple_trace(pi, couple).u0_part, params, label)


def couple_contribution(pi: Partition3D, couple: str, params) -> FactoredRational:
    return _couple_data(pi, couple, params).euler


@dataclass
class PointContribution:
    point: FixedPoint
    euler: FactoredRational
    zero_reason: str = ""

    @property
    def is_zero(self) -> bool:
        return self.euler.is_zero()


def point_contribution(fp: FixedPoint, params) -> PointContribution:
    dA = _couple_data(fp.piA, A, params)
    dB = _couple_data(fp.piB, B, params)
    reason = "; ".join(f"{side}: {d.zero_reason}" for side, d in (("A", dA), ("B", dB)) if d.zero_reason)
    return PointContribution(fp, pair_product(dA.euler, dB.euler), reason)


def _point_contribution_safe(args):
    fp, params = args
    try:
        return point_contribution(fp, params)
    except NonIsolatedFixedPoint as exc:
        return exc


def fixed_point_contributions(n: int, params, jobs: int = 1) -> list[PointContribution]:
    """Contributions of every fixed point of length ``n``, in enumeration order.

    Raises NonIsolatedFixedPoint listing every offending point.
    """
    points = enumerate_fixed_points(n)
    if jobs > 1 and len(points) > 1:
        with ProcessPoolExecutor(jobs) as pool:
            results = list(pool.map(_point_contribution_safe, [(fp, params) for fp in points]))
    else:
        results = [_point_contribution_safe((fp, params)) for fp in points]
    bad = [(fp, r) for fp, r in zip(points, results) if isinstance(r, NonIsolatedFixedPoint)]
    if bad:
        names = [fp.describe() for fp, _ in bad]
        raise NonIsolatedFixedPoint(
            f"n={n}: {len(bad)} fixed point(s) have weight 0 in Ext^1, e.g. {names[0]}; "
            "the N_S-fixed locus is not isolated and localization over isolated points does not apply",
            names)
    return results


def _check_integer(x: Fraction, what: str) -> int:
    if x.denominator != 1:
        raise NonInteger(f"{what} = {x} is not an integer")
    return int(x)


def quadratic_dt(n: int, mode: str = "numeric", params=None, jobs: int = 1) -> int:
    """Quadratic DT invariant of P^3 of length ``n``.

    ``mode="numeric"``: ``params`` is a ParamChoice (default (7,1)).
    ``mode="symbolic"``: ``params`` is a Region, or None for all four
    congruence regions (which must agree).
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    if n % 2:
        return 0
    if mode == "numeric":
        p = params or DEFAULT_PARAMS
        contribs = fixed_point_contributions(n, p, jobs)
        total = rf_sum_to_constant([c.euler for c in contribs], "numeric", p.values)
        return _check_integer(total, f"I~_{n} at {p}")
    if mode == "symbolic":
        regions = [params] if params is not None else list(ALL_REGIONS)
        values = set()
        for r in regions:
            if not isinstance(r, Region):
                raise TypeError("symbolic mode takes a Region")
            contribs = fixed_point_contributions(n, r, jobs)
            values.add(_check_integer(rf_sum_to_constant([c.euler for c in contribs], "symbolic"),
                                      f"I~_{n} in region {r}"))
        if len(values) != 1:
            raise Disagreement(f"I~_{n} differs between congruence regions: {sorted(values)}")
        return values.pop()
    raise ValueError(f"unknown mode {mode!r}")


def param_independence(n: int, ps: Sequence[ParamChoice]) -> int:
    if len({p.region for p in ps}) < 2:
        raise ValueError("parameter list must span at least two congruence classes mod 4")
    results = [(p, quadratic_dt(n, "numeric", p)) for p in ps]
    p0, v0 = results[0]
    for p, v in results[1:]:
        if v != v0:
            raise Disagreement(f"I~_{n}: {v0} at {p0} but {v} at {p}")
    return v0


# ---------------------------------------------------------------------------
# Classical (complex) DT invariants of P^3 via the full torus

# Overall sign of the raw localization sum, fixed once against I_1 = 20 and
# applied as CLASSICAL_SIGN ** n for every n.  The raw sum already gives +20.
CLASSICAL_SIGN = 1


def enumerate_classical_fixed_points(n: int) -> list[ClassicalFixedPoint]:
    out = []
    for sizes in itertools.product(range(n + 1), repeat=4):
        if sum(sizes) != n:
            continue
        for parts in itertools.product(*(enumerate_partitions(k) for k in sizes)):
            out.append(ClassicalFixedPoint(tuple(parts)))
    return out


@lru_cache(maxsize=None)
def _classical_chart(pi: Partition3D, chart: int) -> FactoredRational:
    w = chart_weights_classical(chart)
    return classical_euler(vertex_trace(q_poly(pi, w), w))


def classical_contribution(fp: ClassicalFixedPoint) -> FactoredRational:
    out = FactoredRational.one(4)
    for chart, pi in enumerate(fp.charts):
        if pi.size:
            out = out * _classical_chart(pi, chart)
    return out


def classical_raw(n: int, lambdas=DEFAULT_LAMBDAS) -> Fraction:
    lambdas = tuple(Fraction(x) for x in lambdas)
    if len(lambdas) != 4 or len(set(lambdas)) != 4:
        raise DegenerateParameters("need four pairwise distinct lambdas")
    contribs = [classical_contribution(fp) for fp in enumerate_classical_fixed_points(n)]
    return rf_sum_to_constant(contribs, "numeric", lambdas)


def classical_dt(n: int, lambdas=DEFAULT_LAMBDAS) -> int:
    if n < 0:
        raise ValueError("n must be nonnegative")
    return _check_integer(CLASSICAL_SIGN ** n * classical_raw(n, lambdas), f"I_{n}")


# ---------------------------------------------------------------------------
# Series comparison


@dataclass
class ConjectureRow:
    n: int
    computed: int
    predicted: Fraction

    @property
    def match(self) -> bool:
        return self.computed == self.predicted


def conjecture_check(n_max: int, order: int = DEFAULT_ORDER) -> list[ConjectureRow]:
    """Compare I~_n, n <= n_max, with the q^n coefficients of M(-q^2)^(-10)."""
    if n_max > MAX_ISOLATED_N:
        raise ValueError(f"n_max must be <= {MAX_ISOLATED_N}: larger n have non-isolated fixed loci")
    s = conjectural_series(max(order, n_max), CONJECTURE_EXPONENT)
    return [ConjectureRow(n, quadratic_dt(n), s[n]) for n in range(n_max + 1)]


def classical_series_coefficient(n: int) -> Fraction:
    return classical_series(max(n, 1))[n]


# ---------------------------------------------------------------------------
# Reports


def _fraction_str(x: Fraction) -> str:
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def quadratic_report(n: int, mode: str = "numeric", params: Sequence[ParamChoice] = (), jobs: int = 1) -> dict:
    """JSON-ready record of a quadratic computation.

    ``mode`` is ``numeric`` (one run per parameter choice), ``symbolic`` (one
    run per congruence region of the given choices, all four if none given) or
    ``both``.  Every run must produce the same integer total.
    """
    if mode not in ("numeric", "symbolic", "both"):
        raise ValueError(f"unknown mode {mode!r}")
    explicit = bool(params)
    params = list(params) or [DEFAULT_PARAMS]
    report = {"n": n, "mode": mode, "params": [list(p.values) for p in params],
              "fixed_points": [], "runs": [], "total": 0}
    if n < 0:
        raise ValueError("n must be nonnegative")
    if n % 2:
        report["note"] = "no N_S-fixed subschemes of odd length; the invariant vanishes"
        return report

    p0 = params[0]
    ctx = p0 if mode != "symbolic" else p0.region
    for c in fixed_point_contributions(n, ctx, jobs):
        rec = {
            "pointA": c.point.piA.to_json(),
            "pointB": c.point.piB.to_json(),
            "ideal": c.point.describe(),
            "euler_factored": c.euler.format(),
            "euler_numeric": _fraction_str(c.euler.evaluate(p0.values)) if mode != "symbolic" else None,
        }
        if c.zero_reason:
            rec["zero_reason"] = c.zero_reason
        report["fixed_points"].append(rec)

    totals = set()
    if mode in ("numeric", "both"):
        for p in params:
            v = quadratic_dt(n, "numeric", p, jobs)
            report["runs"].append({"mode": "numeric", "params": list(p.values), "total": v})
            totals.add(v)
    if mode in ("symbolic", "both"):
        regions = list(ALL_REGIONS)
        if mode == "symbolic" and explicit:
            regions = [r for r in ALL_REGIONS if r in {p.region for p in params}]
        for r in regions:
            v = quadratic_dt(n, "symbolic", r, jobs)
            report["runs"].append({"mode": "symbolic", "region": [r.a_mod4, r.b_mod4], "total": v})
            totals.add(v)
    if len(totals) != 1:
        raise Disagreement(f"runs disagree: {report['runs']}")
    report["total"] = totals.pop()
    return report
