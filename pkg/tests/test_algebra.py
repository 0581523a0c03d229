"""Exact arithmetic: half-integers, Laurent polynomials, determinants."""

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hexchar.exactdet import det_cofactor, det_exact
from hexchar.halfint import HalfInt, TOP, format_half, fraction_sqrt, parse_half
from hexchar.laurent import LaurentError, LaurentPoly


def x(i, nvars=2, p=2):
    return LaurentPoly.var(nvars, i, p)


def test_halfint_basics():
    assert parse_half("3/2") == 3
    assert parse_half("-2") == -4
    assert format_half(3) == "3/2"
    assert format_half(-4) == "-2"
    assert HalfInt(3) + HalfInt(1) == HalfInt(4)
    assert HalfInt(1) < HalfInt(2) < TOP
    assert TOP >= TOP
    assert not (TOP < HalfInt(100))
    assert abs(HalfInt(-5)) == HalfInt(5)


def test_fraction_sqrt():
    assert fraction_sqrt(Fraction(4, 9)) == Fraction(2, 3)
    assert fraction_sqrt(Fraction(2)) is None
    assert fraction_sqrt(Fraction(0)) == 0


def test_laurent_add_two_terms():
    # x1 + 1/x1 has two terms
    p = x(0) + x(0, p=-2)
    assert len(p.terms) == 2


def test_laurent_half_grid_mul():
    # sqrt(x) * sqrt(x) = x
    assert x(0, p=1) * x(0, p=1) == x(0, p=2)


def test_laurent_mul_expansion():
    # (x + 1/x)(x^2 + x^-2) = x^3 + x + 1/x + 1/x^3, four terms
    a = x(0, 1) + x(0, 1, p=-2)
    b = x(0, 1, p=4) + x(0, 1, p=-4)
    prod = a * b
    assert prod == LaurentPoly(1, {(6,): 1, (2,): 1, (-2,): 1, (-6,): 1})


def test_laurent_eval():
    assert (x(0, 1) + x(0, 1, p=-2)).eval([Fraction(2)]) == Fraction(5, 2)
    assert x(0, 1, p=1).eval([Fraction(4)]) == 2
    table = LaurentPoly(2, {(-2, -2): 1, (0, 0): 2, (2, 2): 1, (-2, 2): 1, (2, -2): 1})
    assert table.eval([2, 3]) == Fraction(31, 3)
    with pytest.raises(LaurentError):
        x(0, 1, p=1).eval([Fraction(2)])  # not a square
    with pytest.raises(LaurentError):
        x(0, 1).eval([Fraction(0)])


def test_laurent_dimension_mismatch():
    with pytest.raises(LaurentError):
        LaurentPoly.one(2) * LaurentPoly.one(3)


def test_laurent_json_roundtrip():
    p = x(0) * Fraction(3, 2) + x(1, p=-2) - LaurentPoly.const(2, Fraction(1, 3))
    j = p.to_json()
    assert j["terms"] == sorted(j["terms"], key=lambda t: t["exp"])
    assert LaurentPoly.from_json(j) == p


def test_collapse_pairs_and_flip():
    p = LaurentPoly(4, {(2, 0, 0, 2): 1, (0, 2, 2, 0): 1})
    q = p.collapse_pairs()
    assert q == LaurentPoly(2, {(2, -2): 1, (-2, 2): 1})
    assert q.flip_vars([0, 1]) == q


small_fractions = st.fractions(
    min_value=-4, max_value=4, max_denominator=8
)


def polys(nvars=2, size=3):
    def build(entries):
        return LaurentPoly(nvars, {tuple(e): c for *e, c in entries})

    entry = st.tuples(*([st.integers(-3, 3)] * nvars + [small_fractions]))
    return st.lists(entry, max_size=size).map(build)


@settings(max_examples=60, deadline=None)
@given(polys(), polys(), polys())
def test_ring_axioms(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert a + b == b + a
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c


@settings(max_examples=40, deadline=None)
@given(polys(), polys())
def test_eval_is_ring_hom(a, b):
    point = [Fraction(9, 4), Fraction(4)]
    assert (a * b).eval(point) == a.eval(point) * b.eval(point)
    assert (a + b).eval(point) == a.eval(point) + b.eval(point)


def test_det_examples():
    assert det_exact([[1]]) == 1
    assert det_exact([[1, 2], [3, 4]]) == -2
    # the 2x2 Schur numerator for shape (1,0) at the point (2,3)
    assert det_exact([[4, 1], [9, 1]]) == -5
    assert det_exact([[Fraction(1, 2), 1], [1, 2]]) == 0


@settings(max_examples=40, deadline=None)
@given(
    st.integers(1, 4).flatmap(
        lambda n: st.lists(
            st.lists(small_fractions, min_size=n, max_size=n), min_size=n, max_size=n
        )
    )
)
def test_det_matches_cofactor(m):
    assert det_exact(m) == det_cofactor(m)
