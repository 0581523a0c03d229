"""Pattern families: validity, weights, enumeration, involution, round-up."""

import itertools

import pytest

from hexchar.laurent import LaurentPoly
from hexchar.partitions import Partition
from hexchar.patterns import (
    Pattern,
    character_gf,
    iter_patterns,
    j_involution,
    pattern_weight,
    split_preimages,
    split_to_symplectic_roundup,
    validate_pattern,
)


def P(s):
    return Partition.parse(s)


def pat(family, rows, n=None, m=0):
    rows = {i + 1 + (0 if not m else 0): tuple(2 * v for v in r) for i, r in enumerate(rows)}
    n = n or 0
    return Pattern(family, n, m, rows)


def mono(nvars, **exps):
    e = [0] * nvars
    for k, v in exps.items():
        e[int(k[1:])] = 2 * v
    return LaurentPoly.monomial(nvars, tuple(e))


def test_validate_figure_pattern():
    p = pat("symplectic", [(0,), (0,), (0, 0), (0, 1), (0, 1, 1), (1, 1, 2)], n=3)
    assert validate_pattern(p) == []


def test_validate_all_zero():
    p = pat("symplectic", [(0,), (0,), (0, 0), (0, 0)], n=2)
    assert validate_pattern(p) == []


def test_minimal_invalid_symplectic():
    # brute force: the smallest bad pattern on rows (0; 1; 0,0; 0,1)
    p = pat("symplectic", [(0,), (1,), (0, 0), (0, 1)], n=2)
    viol = validate_pattern(p)
    assert viol and any("rows 2/3" in v for v in viol)


def test_weights():
    fig = pat("symplectic", [(0,), (0,), (0, 0), (0, 1), (0, 1, 1), (1, 1, 2)], n=3)
    assert pattern_weight(fig) == mono(3, x1=1, x2=1)
    zero = pat("symplectic", [(0,), (0,), (0, 0), (0, 0)], n=2)
    assert pattern_weight(zero) == LaurentPoly.one(2)
    eo = pat("even_orthogonal", [(-1,), (1,), (1, 1)], n=2)
    assert pattern_weight(eo) == mono(2, x0=-1, x1=-1)
    split = Pattern("split_orthogonal", 2, 0, {1: (1,), 2: (2,), 3: (0, 2), 4: (0, 2)})
    assert pattern_weight(split) == LaurentPoly.one(2)


def test_enumeration_counts():
    assert sum(1 for _ in iter_patterns("symplectic", 2, 0, (0, 2))) == 4
    assert (
        sum(1 for _ in iter_patterns("even_orthogonal", 2, 0, (2, 2), bottom_variants=True)) == 6
    )
    assert sum(1 for _ in iter_patterns("split_orthogonal", 2, 0, (0, 2))) == 5


def test_enumeration_no_duplicates_all_valid():
    for family, bottom in [
        ("gt", (0, 2, 4)),
        ("symplectic", (0, 2, 4)),
        ("even_orthogonal", (2, 4)),
        ("split_orthogonal", (0, 2)),
    ]:
        n = len(bottom)
        seen = set()
        for p in iter_patterns(family, n, 0, bottom, bottom_variants=True):
            assert validate_pattern(p) == []
            assert p not in seen
            seen.add(p)


def test_top_equals_bottom_single_pattern():
    for family in ("gt", "symplectic", "even_orthogonal", "split_orthogonal"):
        hits = list(iter_patterns(family, 2, 2, (0, 2), (0, 2)))
        assert len(hits) == 1
        assert pattern_weight(hits[0]) == LaurentPoly.one(0)


def test_character_gf_examples():
    assert character_gf("sp", P("1,0")) == LaurentPoly(
        2, {(2, 0): 1, (-2, 0): 1, (0, 2): 1, (0, -2): 1}
    )
    assert character_gf("oe", P("1,1")) == LaurentPoly(
        2, {(2, 2): 1, (-2, -2): 1, (2, -2): 1, (-2, 2): 1, (0, 0): 2}
    )
    assert character_gf("schur", P("0,0,0")) == LaurentPoly.one(3)
    # skew examples
    oe_skew = character_gf("oe", P("1,1,1"), P("1"))
    assert oe_skew == LaurentPoly(
        2, {(0, 0): 2, (2, 2): 1, (2, -2): 1, (-2, 2): 1, (-2, -2): 1}
    )
    x, xb = LaurentPoly.var(2, 0), LaurentPoly.var(2, 0, -2)
    y, yb = LaurentPoly.var(2, 1), LaurentPoly.var(2, 1, -2)
    one = LaurentPoly.one(2)
    assert character_gf("so_odd", P("1,1,1"), P("1")) == (one + x + xb) * (one + y + yb) + one


def test_skew_zero_when_not_interlacing():
    assert character_gf("sp", P("3,2,2"), P("1,1")).is_zero()
    assert character_gf("oe", P("4,3,3"), P("2,2")).is_zero()


def test_straight_case_consistency():
    # skew enumeration with an empty inner shape equals straight enumeration
    for fam, gname in [("symplectic", "sp"), ("split_orthogonal", "so_odd")]:
        lam = P("2,1")
        a = list(iter_patterns(fam, 2, 0, lam.increasing()))
        b = list(iter_patterns(fam, 2, 0, lam.increasing(), None))
        assert a == b
    assert character_gf("sp", P("2,1"), None) == character_gf("sp", P("2,1"))


def test_parity_mismatch():
    with pytest.raises(ValueError):
        character_gf("oe", P("3/2,1/2"), P("1"))


def test_j_involution_example():
    p = Pattern("even_orthogonal", 2, 0, {1: (0,), 2: (2,), 3: (2, 4)})
    q = j_involution(p, 2)
    assert q.rows[2] == (4,)
    assert pattern_weight(q) == pattern_weight(p).flip_vars([1])
    fixed = Pattern("even_orthogonal", 2, 0, {1: (0,), 2: (2,), 3: (2, 2)})
    assert j_involution(fixed, 2) == fixed


def test_j_involution_exhaustive():
    # over all straight patterns with bottom (2,1) or its starter-negated
    # variant and a zero starter next to row 2i-2: stays valid, squares to
    # the identity, negates the x_i exponent
    lam = P("2,1")
    for p in iter_patterns("even_orthogonal", 2, 0, lam.increasing(), bottom_variants=True):
        if p.first(1) != 0 and p.first(3) != 0:
            continue
        q = j_involution(p, 2)
        assert validate_pattern(q) == []
        assert j_involution(q, 2) == p
        we, wq = pattern_weight(p), pattern_weight(q)
        assert wq == we.flip_vars([1])


def test_roundup_and_fibers():
    split = Pattern("split_orthogonal", 2, 0, {1: (1,), 2: (2,), 3: (0, 2), 4: (0, 2)})
    sym, count = split_to_symplectic_roundup(split)
    assert count == 1
    assert sym.rows[1] == (2,)
    assert validate_pattern(sym) == []
    allint = Pattern("split_orthogonal", 2, 0, {1: (2,), 2: (2,), 3: (0, 2), 4: (0, 2)})
    sym2, count2 = split_to_symplectic_roundup(allint)
    assert count2 == 0 and sym2.rows == allint.rows
    pre = split_preimages(sym)
    assert len(pre) == 2 and split in pre and validate_pattern(pre[0]) == []
    # a half-odd starter in odd row 2i-1 carries x_i relative to its round-up
    assert pattern_weight(split) == pattern_weight(sym) * LaurentPoly.var(2, 0)


def test_fiber_sum_identity():
    # sum of split weights equals sum over symplectic patterns of the weight
    # times prod (1 + x_i) over positive odd starters
    lam = P("2,1")
    lhs = character_gf("so_odd", lam)
    rhs = LaurentPoly.zero(2)
    for q in iter_patterns("symplectic", 2, 0, lam.increasing()):
        term = pattern_weight(q)
        for i in (1, 2):
            if q.first(2 * i - 1) > 0:
                term = term * (LaurentPoly.one(2) + LaurentPoly.var(2, i - 1, 2))
        rhs = rhs + term
    assert lhs == rhs


def test_bar_invariance():
    for fam in ("sp", "oe", "so_odd"):
        for lam_s in ("2,1", "3,1,0", "2,2,2"):
            lam = P(lam_s)
            gf = character_gf(fam, lam)
            for i in range(len(lam)):
                assert gf.flip_vars([i]) == gf


def test_json_roundtrip():
    p = Pattern("even_orthogonal", 2, 0, {1: (-1,), 2: (3,), 3: (1, 3)})
    assert Pattern.from_json(p.to_json()) == p
