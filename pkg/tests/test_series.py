from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from quaddt.series import (
    NonUnitConstantTerm,
    TruncatedSeries,
    classical_series,
    conjectural_series,
    from_list,
    macmahon,
    series_pow,
    substitute,
)


def sigma2(k):
    return sum(d * d for d in range(1, k + 1) if k % d == 0)


def macmahon_power(k, N):
    """Coefficients of M(q)^k from q d/dq log M(q) = sum_n sigma_2(n) q^n."""
    c = [Fraction(1)]
    for n in range(1, N + 1):
        c.append(k * sum(sigma2(j) * c[n - j] for j in range(1, n + 1)) / n)
    return c


def test_macmahon_coefficients():
    assert macmahon(10).ints() == [1, 1, 3, 6, 13, 24, 48, 86, 160, 282, 500]


def test_classical_series():
    oracle = macmahon_power(-20, 8)
    signed = [c * (-1) ** n for n, c in enumerate(oracle)]
    assert classical_series(8).ints() == [int(c) for c in signed]
    assert classical_series(4).ints() == [1, 20, 150, 400, -855]


def test_conjectural_series():
    s = conjectural_series(16)
    assert [s[n] for n in range(9)] == [1, 0, 10, 0, 25, 0, -50, 0, -240]
    oracle = macmahon_power(-10, 8)
    assert [s[2 * k] for k in range(9)] == [c * (-1) ** k for k, c in enumerate(oracle)]
    assert all(s[2 * k + 1] == 0 for k in range(8))


def test_substitute():
    s = from_list([1, 2, 3])
    assert substitute(s, "neg_q").ints() == [1, -2, 3]
    assert substitute(s, "neg_q_squared").ints() == [1, 0, -2, 0, 3]
    with pytest.raises(ValueError):
        substitute(s, "q_cubed")


def test_reciprocal_needs_unit():
    with pytest.raises(NonUnitConstantTerm):
        from_list([2, 1]).reciprocal()


def test_truncation_order():
    s = from_list([1, 1, 1]) * from_list([1, 1])
    assert s.order == 1
    with pytest.raises(IndexError):
        s[2]


series = st.lists(st.integers(-5, 5), min_size=1, max_size=8).map(lambda cs: from_list([1] + cs))


@given(series, st.integers(-4, 4), st.integers(-4, 4))
def test_power_laws(s, j, k):
    assert series_pow(s, j) * series_pow(s, k) == series_pow(s, j + k)
    assert s * s.reciprocal() == TruncatedSeries.one(s.order)
