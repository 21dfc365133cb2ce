from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from quaddt.algebra import ALL_REGIONS, LinearForm, ParamChoice, VirtualCharacter
from quaddt.euler import (
    MAGNITUDE_SIGN,
    TRIVIAL_EXT2,
    EulerFactor,
    NonIsolatedFixedPoint,
    classical_euler,
    corrupted_signs,
    quadratic_euler,
    quadratic_euler_data,
    split_trace,
)
from quaddt.invariants import FixedPoint, point_contribution
from quaddt.partitions import Partition3D, enumerate_partitions, permute_axes, q_poly
from quaddt.reference import COUPLE_PARTNER_AXES, E, REFERENCE_POINTS
from quaddt.vertex import A, B, chart_weights_classical, couple_trace, vertex_trace

P = Partition3D.of
lf = LinearForm.parse
PARAMS = [ParamChoice(*p) for p in [(7, 1), (9, 1), (11, 1), (13, 1), (17, 3), (19, 3)]]
CONTEXTS = list(ALL_REGIONS) + PARAMS


@pytest.mark.parametrize("rp", REFERENCE_POINTS, ids=lambda rp: rp.name)
def test_golden_euler_classes(rp):
    for ctx in CONTEXTS:
        c = point_contribution(FixedPoint(rp.piA, rp.piB), ctx)
        if rp.euler is None:
            assert c.is_zero and TRIVIAL_EXT2 in c.zero_reason
        else:
            assert c.euler == rp.euler


def test_e12_value():
    u0 = couple_trace(P([(0, 0, 0)]), B).u0_part
    assert quadratic_euler(u0, ParamChoice(7, 1)).evaluate((7, 1)) == Fraction(5, 6)
    assert E["e11"].evaluate((7, 1)) + E["e12"].evaluate((7, 1)) == 10


def test_couple_swap():
    # the B-side class of the partner partition is the A-side class with a <-> b
    for m in range(1, 4):
        for pi in enumerate_partitions(m):
            for ctx in CONTEXTS:
                ea = point_contribution(FixedPoint(pi, P([])), ctx).euler
                eb = point_contribution(FixedPoint(P([]), permute_axes(pi, COUPLE_PARTNER_AXES)), ctx).euler
                assert eb == ea.swap((1, 0))


@given(st.integers(1, 3).flatmap(lambda m: st.sampled_from(enumerate_partitions(m))),
       st.sampled_from([A, B]), st.sampled_from(PARAMS))
def test_region_matches_numeric(pi, couple, p):
    u0 = couple_trace(pi, couple).u0_part
    assert quadratic_euler(u0, p) == quadratic_euler(u0, p.region)


def test_factor_rule():
    p = ParamChoice(7, 1)
    # 3a+b = 22 = 2 mod 4, positive
    f = EulerFactor.of(lf("3a+b"), p)
    assert (f.orientation_sign, f.magnitude_sign, f.half) == (1, 1, True)
    # -2a = -14: |m| = 14 = 2 mod 4, even negative weight picks up the orientation sign
    f = EulerFactor.of(lf("-2a"), p)
    assert (f.orientation_sign, f.magnitude_sign, f.half) == (-1, 1, True)
    c, w = f.scalar_and_form(p)
    assert c * w.eval(p.values) == -7
    # a-b = 6, |m|/2 = 3 with + sign
    c, w = EulerFactor.of(lf("a-b"), p).scalar_and_form(p)
    assert c * w.eval(p.values) == 3
    assert MAGNITUDE_SIGN == {1: 1, 2: 1, 3: -1, 0: -1}


def test_n8_weight_zero():
    pi = P([(0, 0, 0), (0, 1, 0), (0, 0, 1), (0, 1, 1)])
    assert pi.ideal_str() == "(x,y^2,z^2)"
    u0 = couple_trace(pi, A).u0_part
    ext1, _ = split_trace(u0)
    assert LinearForm.zero(2) in ext1
    with pytest.raises(NonIsolatedFixedPoint):
        quadratic_euler_data(u0, ParamChoice(7, 1), "x")


def test_trivial_ext2_gives_zero():
    u0 = couple_trace(Partition3D.column(0, 2), A).u0_part
    d = quadratic_euler_data(u0, ParamChoice(7, 1))
    assert d.euler.is_zero() and d.zero_reason == TRIVIAL_EXT2


def test_orientation_corruption_changes_some_classes():
    p = ParamChoice(7, 1)
    before = [point_contribution(FixedPoint(rp.piA, rp.piB), p).euler for rp in REFERENCE_POINTS]
    with corrupted_signs("orientation"):
        after = [point_contribution(FixedPoint(rp.piA, rp.piB), p).euler for rp in REFERENCE_POINTS]
    assert any(x != y for x, y in zip(before, after))
    assert before == [point_contribution(FixedPoint(rp.piA, rp.piB), p).euler for rp in REFERENCE_POINTS]


@pytest.mark.parametrize("table", [{2: -1}, {0: 1}, {2: -1, 0: 1}])
def test_mod4_table_has_no_effect_up_to_length_6(table):
    # every quadratic weight has even coefficient sum, so only residues 0 and 2
    # occur, and they occur an even number of times per couple
    for rp in REFERENCE_POINTS:
        fp = FixedPoint(rp.piA, rp.piB)
        ref = point_contribution(fp, ALL_REGIONS[0]).euler
        with corrupted_signs("table", table):
            assert point_contribution(fp, ALL_REGIONS[0]).euler == ref


def test_classical_euler_single_point():
    s = chart_weights_classical(0)
    r = classical_euler(vertex_trace(q_poly(P([(0, 0, 0)]), s), s))
    # Ext^1 has weights -w_i and Ext^2 has -w_i - w_j, so the ratio is prod(w_i + w_j) / prod(w_i)
    lam = (0, 1, 17, 65)
    w = [x.eval(lam) for x in s]
    expect = Fraction((w[0] + w[1]) * (w[0] + w[2]) * (w[1] + w[2]), w[0] * w[1] * w[2])
    assert r.evaluate(lam) == expect


def test_split_trace():
    v = VirtualCharacter([(lf("a"), 2), (lf("b"), -1)])
    assert split_trace(v) == ([lf("a"), lf("a")], [lf("b")])
