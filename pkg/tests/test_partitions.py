import pytest
from hypothesis import given
from hypothesis import strategies as st

from quaddt.algebra import LinearForm, VirtualCharacter
from quaddt.partitions import Partition3D, enumerate_partitions, permute_axes, q_poly, sigma_transpose
from quaddt.series import macmahon

P = Partition3D.of


def sigma2(k):
    return sum(d * d for d in range(1, k + 1) if k % d == 0)


def macmahon_by_recurrence(N):
    # n a_n = sum_{k=1}^n sigma_2(k) a_{n-k}, from the log-derivative of prod (1-q^n)^-n
    a = [1]
    for n in range(1, N + 1):
        a.append(sum(sigma2(k) * a[n - k] for k in range(1, n + 1)) // n)
    return a


def test_small_counts():
    assert [len(enumerate_partitions(m)) for m in range(5)] == [1, 1, 3, 6, 13]
    assert len(enumerate_partitions(5)) == 24


def test_counts_match_macmahon():
    oracle = macmahon_by_recurrence(8)
    assert oracle[:9] == [1, 1, 3, 6, 13, 24, 48, 86, 160]
    assert [len(enumerate_partitions(m)) for m in range(9)] == oracle
    assert macmahon(8).ints() == oracle


def test_enumeration_is_distinct_and_valid():
    for m in range(7):
        ps = enumerate_partitions(m)
        assert len(set(ps)) == len(ps)
        assert all(p.size == m for p in ps)


def test_not_downward_closed():
    with pytest.raises(ValueError):
        P([(1, 0, 0)])


def test_sigma_transpose_examples():
    assert sigma_transpose(Partition3D.column(1, 2), "A") == Partition3D.column(2, 2)
    assert sigma_transpose(Partition3D.column(0, 2), "A") == Partition3D.column(0, 2)
    assert sigma_transpose(Partition3D.column(0, 2), "B") == Partition3D.column(1, 2)
    assert sigma_transpose(Partition3D.column(2, 3), "B") == Partition3D.column(2, 3)


@given(st.integers(0, 5).flatmap(lambda m: st.sampled_from(enumerate_partitions(m))), st.sampled_from("AB"))
def test_sigma_is_involution(pi, couple):
    assert sigma_transpose(sigma_transpose(pi, couple), couple) == pi


def test_permute_axes():
    # (i,j,k) -> (j,k,i)
    assert permute_axes(Partition3D.column(0, 2), (2, 0, 1)) == Partition3D.column(2, 2)
    assert permute_axes(Partition3D.column(1, 2), (2, 0, 1)) == Partition3D.column(0, 2)


def test_generators_and_ideal_str():
    assert Partition3D.column(0, 2).ideal_str() == "(x^2,y,z)"
    assert P([(0, 0, 0), (1, 0, 0), (0, 1, 0)]).ideal_str() == "(x^2,xy,y^2,z)"
    assert Partition3D.column(2, 2).ideal_str() == "(x,y,z^2)"
    assert P([]).ideal_str() == "(1)"


def test_q_poly_examples():
    s = (LinearForm.parse("-2a"), LinearForm.parse("b-a"), LinearForm.parse("-a-b"))
    assert q_poly(P([(0, 0, 0)]), s) == VirtualCharacter.one(2)
    q = q_poly(P([(0, 0, 0), (1, 0, 0)]), s)
    assert q == VirtualCharacter([(LinearForm.zero(2), 1), (LinearForm.parse("-2a"), 1)])
    assert q_poly(P([]), s) == VirtualCharacter({}, arity=2)
    assert q_poly(Partition3D.box(2, 2, 2), s).rank() == 8
