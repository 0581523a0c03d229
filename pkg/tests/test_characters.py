"""Determinantal character evaluation and its invariances."""

import random
from fractions import Fraction

import pytest

from hexchar.characters import DegeneratePointError, char_eval_det, random_point
from hexchar.partitions import Partition, hat_shape


def P(s):
    return Partition.parse(s)


def test_golden_values():
    assert char_eval_det("schur", P("1"), 1, [2]) == 2
    assert char_eval_det("sp", P("1,0"), 2, [2, 3]) == Fraction(35, 6)
    assert char_eval_det("oe", P("1,1"), 2, [2, 3]) == Fraction(31, 3)
    # odd orthogonal points are the square roots s_i, here x = (4, 9)
    assert char_eval_det("so_odd", P("1,0"), 2, [2, 3]) == Fraction(517, 36)


def test_padding_and_iverson():
    # the doubling factor appears exactly when the last part is nonzero
    v1 = char_eval_det("oe", P("1,1"), 2, [2, 3])
    v0 = char_eval_det("oe", P("1,0"), 2, [2, 3])
    assert v1 != v0
    assert char_eval_det("oe", P("1"), 2, [2, 3]) == v0


def test_degenerate_point():
    with pytest.raises(DegeneratePointError):
        char_eval_det("schur", P("1,0"), 2, [2, 2])
    with pytest.raises(DegeneratePointError):
        char_eval_det("sp", P("1,0"), 2, [2, Fraction(1, 2)])  # x and 1/x collide


def test_half_integer_even_orthogonal():
    # the half-integer shape via s = 2, x = 4: x^(3/2) + x^(-3/2) = 8 + 1/8
    assert char_eval_det("oe", P("3/2"), 1, [2]) == Fraction(65, 8)


def test_schur_symmetric_in_point():
    rng = random.Random(5)
    pt = random_point(3, rng)
    lam = P("2,1,0")
    base = char_eval_det("schur", lam, 3, pt)
    assert char_eval_det("schur", lam, 3, [pt[1], pt[2], pt[0]]) == base


def test_reciprocal_invariance():
    rng = random.Random(11)
    for fam in ("sp", "oe", "so_odd"):
        lam = P("2,1")
        pt = random_point(2, rng)
        inv = [1 / q for q in pt]
        assert char_eval_det(fam, lam, 2, pt) == char_eval_det(fam, lam, 2, inv)


def test_hat_shapes():
    lam = P("1")
    assert hat_shape(lam, 1) == P("3,0")
    assert hat_shape(lam, 2) == P("2,0")
    lam = P("2,0")
    assert hat_shape(lam, 1) == P("5,3,2,0")
    assert hat_shape(lam, 2) == P("4,2,2,0")


def test_random_point_determinism():
    assert random_point(3, 17) == random_point(3, 17)
    pt = random_point(4, 17)
    assert len(set(pt)) == 4 and all(q > 0 for q in pt)
