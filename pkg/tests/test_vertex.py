import re

import pytest
from hypothesis import given
from hypothesis import strategies as st

from quaddt.algebra import LinearForm, VirtualCharacter
from quaddt.partitions import Partition3D, enumerate_partitions, permute_axes, q_poly
from quaddt.verify import koszul_identity
from quaddt.vertex import (
    A,
    B,
    chart_weights_classical,
    chart_weights_quadratic,
    couple_trace,
    vertex_trace,
)

P = Partition3D.of


def parse_trace(text):
    """Read a printed sum such as ``2t^{2a} - t^{3a-b} - 1``."""
    terms = []
    for m in re.finditer(r"([+-])?\s*(\d*)\s*(t\^\{([^}]*)\}|1)", text):
        sign = -1 if m.group(1) == "-" else 1
        k = int(m.group(2)) if m.group(2) else 1
        terms.append((LinearForm.parse(m.group(4) or "0"), sign * k))
    return VirtualCharacter(terms, arity=2)


# U0-side traces written out term by term (before cancellation) in the worked computations
PRINTED_U0 = [
    ([(0, 0, 0)], "t^{2a} + t^{a-b} + t^{a+b} - t^{3a-b} - t^{2a} - t^{3a+b}"),
    ([(0, 0, 0), (1, 0, 0)],
     "t^{2a} + t^{a-b} + t^{a+b} - t^{3a-b} - t^{2a} - t^{3a+b}"
     " + t^{4a} + t^{b-a} + t^{-b-a} - 1 - t^{5a-b} - t^{5a+b}"),
    ([(0, 0, 0), (0, 1, 0)],
     "t^{a-b} + t^{2a} + t^{a+b} - t^{3a-b} - t^{2a} - t^{3a+b}"
     " + t^{2a-2b} + t^{2b} + t^{b+a} - t^{2a+2b} - t^{3a-b} - t^{4a-2b}"),
    ([(0, 0, 0), (0, 0, 1)],
     "t^{a+b} + t^{a-b} + t^{2a} - t^{3a+b} - t^{2a} - t^{3a-b}"
     " + t^{2a+2b} + t^{a-b} + t^{-2b} - t^{2a-2b} - t^{4a+2b} - t^{3a+b}"),
    ([(0, 0, 0), (1, 0, 0), (0, 1, 0)],
     "2t^{2a} + 2t^{a-b} + t^{a+b} - 2t^{2a} - 2t^{3a+b} - t^{3a-b}"
     " + t^{b-a} + t^{2b} - t^{5a-b} - t^{4a-2b} + t^{3a+b} + t^{-2b} - t^{4a+2b} - t^{a-b}"),
    ([(0, 0, 0), (1, 0, 0), (0, 0, 1)],
     "t^{a-b} + 2t^{2a} + 2t^{a+b} - 2t^{3a-b} - 2t^{2a} - t^{3a+b}"
     " + t^{-a-b} + t^{-2b} - t^{5a+b} - t^{4a+2b} - t^{4a -2b} - t^{a+b} + t^{3a-b} + t^{2b}"),
    ([(0, 0, 0), (0, 1, 0), (0, 0, 1)],
     "t^{2a} + 2t^{a+b} + 2t^{a-b} - 2t^{3a+b} - 2t^{3a-b} - t^{2a}"
     " + t^{a-b} + t^{a+b} - t^{3a+b} - t^{3a-b} -t^{3a+3b} - t^{3a-3b} + t^{a+3b} + t^{a-3b}"),
]


@pytest.mark.parametrize("boxes,text", PRINTED_U0)
def test_u0_trace_matches_printed(boxes, text):
    assert couple_trace(P(boxes), A).u0_part == parse_trace(text)


def test_single_point_couple_trace():
    ct = couple_trace(P([(0, 0, 0)]), A)
    want = parse_trace("t^{a-b} + t^{b-a} + t^{a+b} + t^{-a-b}"
                       " - t^{3a-b} - t^{-3a+b} - t^{3a+b} - t^{-3a-b}")
    assert ct.full == want
    assert ct.full.rank() == 0


def test_couple_b_is_a_b_swap():
    # the U2 trace of pi equals the U0 trace of its partner with a and b exchanged
    for m in range(4):
        for pi in enumerate_partitions(m):
            b_side = couple_trace(pi, B).u0_part
            a_side = couple_trace(permute_axes(pi, (1, 2, 0)), A).u0_part
            assert b_side == a_side.map_weights(lambda w: w.swap((1, 0)))


def test_vertex_on_empty_is_zero():
    s = chart_weights_quadratic(0)
    assert vertex_trace(q_poly(P([]), s), s) == VirtualCharacter({}, arity=2)


def test_chart_weights():
    assert [str(w) for w in chart_weights_quadratic(0)] == ["-2a", "-a+b", "-a-b"]
    assert [str(w) for w in chart_weights_quadratic(3)] == ["a+b", "-a+b", "2b"]
    assert [str(w) for w in chart_weights_classical(1)] == ["l0-l1", "-l1+l2", "-l1+l3"]
    with pytest.raises(ValueError):
        chart_weights_quadratic(4)


partitions = st.integers(0, 4).flatmap(lambda m: st.sampled_from(enumerate_partitions(m)))


@given(partitions, st.sampled_from([A, B]))
def test_trace_symmetry_and_rank(pi, couple):
    ct = couple_trace(pi, couple)
    assert ct.full == ct.full.invert()
    assert ct.full.rank() == 0
    assert ct.u0_part.rank() == 0


@given(partitions, st.integers(0, 3))
def test_classical_vertex_rank(pi, chart):
    # Ext^1 - Ext^2 of a length-m point on a 3-fold has rank 0
    s = chart_weights_classical(chart)
    assert vertex_trace(q_poly(pi, s), s).rank() == 0


@pytest.mark.parametrize("box", [(1, 1, 1), (2, 1, 1), (1, 3, 2), (3, 3, 3)])
@pytest.mark.parametrize("chart", range(4))
def test_koszul(box, chart):
    assert koszul_identity(*box, chart_weights_quadratic(chart))
    assert koszul_identity(*box, chart_weights_classical(chart))
