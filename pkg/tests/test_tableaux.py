"""Skew tableaux: validity, weights, bijections to trapezoidal patterns."""

import pytest

from hexchar.laurent import LaurentPoly
from hexchar.partitions import Partition
from hexchar.patterns import (
    Pattern,
    character_gf,
    iter_patterns,
    pattern_weight,
    validate_pattern,
)
from hexchar.tableaux import (
    SkewTableau,
    iter_tableaux,
    pattern_to_tableau,
    tableau_gf,
    tableau_to_pattern,
    tableau_weight,
    validate_tableau,
)


def P(s):
    return Partition.parse(s)


SPT = {
    "family": "symplectic",
    "outer": ["5", "4", "4", "2", "2"],
    "inner": ["3", "2", "1"],
    "nletters": 2,
    "rows": [
        ["empty", "empty", "empty", "1bar", "1"],
        ["empty", "empty", "1", "1"],
        ["empty", "1", "2", "2"],
        ["1bar", "2bar"],
        ["2bar", "2"],
    ],
}


def test_symplectic_display():
    t = SkewTableau.from_json(SPT)
    assert validate_tableau(t) == []
    assert tableau_weight(t) == LaurentPoly.monomial(2, (4, 2))
    assert SkewTableau.from_json(t.to_json()) == t


def test_single_cell_minimal():
    for fam, sym in [
        ("symplectic", ["1bar"]),
        ("even_orthogonal", ["1check"]),
        ("odd_orthogonal", ["1hat"]),
        ("ordinary", ["1"]),
    ]:
        t = SkewTableau.from_json(
            {"family": fam, "outer": ["1"], "inner": [], "nletters": 1, "rows": [sym]}
        )
        assert validate_tableau(t) == []


def test_column_strictness_violation():
    bad = {**SPT, "rows": [r[:] for r in SPT["rows"]]}
    bad["rows"][3], bad["rows"][4] = ["2bar", "2bar"], ["1bar", "2"]
    t = SkewTableau.from_json(bad)
    assert any("column" in v or "row" in v or "threshold" in v for v in validate_tableau(t))


def test_symplectic_display_to_pattern():
    t = SkewTableau.from_json(SPT)
    p = tableau_to_pattern(t)
    rows = [tuple(v // 2 for v in p.rows[R]) for R in p.present_rows()]
    assert rows == [(1, 2, 3), (1, 1, 2, 4), (1, 2, 4, 5), (1, 2, 2, 4, 5), (2, 2, 4, 4, 5)]
    assert pattern_to_tableau(p) == t


def test_even_orthogonal_display():
    rows = {3: (2, 4), 4: (2, 6), 5: (-2, 4, 6), 6: (2, 4, 8), 7: (0, 2, 6, 8),
            8: (2, 4, 8, 8), 9: (-2, 2, 4, 8, 8)}
    p = Pattern("even_orthogonal", 5, 2, rows)
    assert validate_pattern(p) == []
    t = pattern_to_tableau(p)
    assert t.to_json()["rows"] == [
        ["empty", "empty", "1", "2"],
        ["empty", "1bar", "2bar", "3"],
        ["1bar", "3"],
        ["3hat"],
        ["3check"],
    ]
    assert tableau_to_pattern(t) == p
    assert tableau_weight(t) == pattern_weight(p)


def test_odd_orthogonal_display():
    rows = {4: (2, 4), 5: (0, 4, 4), 6: (4, 4, 6), 7: (3, 4, 6, 6),
            8: (4, 4, 6, 8), 9: (2, 4, 4, 6, 8), 10: (4, 4, 4, 6, 8)}
    p = Pattern("split_orthogonal", 5, 2, rows)
    assert validate_pattern(p) == []
    t = pattern_to_tableau(p)
    assert t.to_json()["rows"] == [
        ["empty", "empty", "1", "2"],
        ["empty", "1bar", "2bar"],
        ["1", "1"],
        ["2hat", "2bar"],
        ["3bar", "3"],
    ]
    assert tableau_weight(t) == LaurentPoly.monomial(3, (4, -2, 0))
    assert tableau_to_pattern(t) == p


def test_ordinary_display():
    # the standard staircase example with six letters
    cells = [
        [1, 1, 1, 2, 2, 5, 5, 6],
        [2, 2, 3, 3, 5, 6],
        [3, 4, 4, 4],
        [5, 5, 6, 6],
        [6, 6],
    ]
    t = SkewTableau(
        "ordinary",
        P("8,6,4,4,2,0"),
        Partition(()),
        6,
        [[(v, "plain") for v in row] for row in cells] + [[]],
    )
    assert validate_tableau(t) == []
    p = tableau_to_pattern(t)
    rows = [tuple(v // 2 for v in p.rows[R]) for R in p.present_rows()]
    assert rows == [
        (3,),
        (2, 5),
        (1, 4, 5),
        (0, 4, 4, 5),
        (0, 2, 4, 5, 7),
        (0, 2, 4, 4, 6, 8),
    ]
    assert pattern_to_tableau(p) == t


def _parts_upto(n, mx):
    out = []

    def rec(pre, hi):
        if len(pre) == n:
            out.append(tuple(pre))
            return
        for v in range(hi, -1, -1):
            rec(pre + [v], v)

    rec([], mx)
    return out


FAMS = [
    ("gt", "ordinary"),
    ("symplectic", "symplectic"),
    ("even_orthogonal", "even_orthogonal"),
    ("split_orthogonal", "odd_orthogonal"),
]


@pytest.mark.parametrize("pfam,tfam", FAMS)
def test_bijection_exhaustive(pfam, tfam):
    for n in (1, 2, 3):
        for m in range(0, n):
            for lam_t in _parts_upto(n, 2):
                for mu_t in _parts_upto(m, 2):
                    lam, mu = Partition.from_ints(lam_t), Partition.from_ints(mu_t)
                    if not lam.contains(mu):
                        continue
                    top = mu.increasing() if m else None
                    pats = list(
                        iter_patterns(
                            pfam, n, m, lam.increasing(), top,
                            bottom_variants=pfam == "even_orthogonal",
                        )
                    )
                    imgs = []
                    for p in pats:
                        t = pattern_to_tableau(p)
                        assert validate_tableau(t) == []
                        assert tableau_weight(t) == pattern_weight(p)
                        assert tableau_to_pattern(t) == p
                        imgs.append(t)
                    assert len(set(imgs)) == len(pats)
                    assert set(imgs) == set(iter_tableaux(tfam, lam, mu, n - m))


def test_generating_function_equality():
    cases = [
        ("sp", "symplectic", "2,1,1", "1"),
        ("oe", "even_orthogonal", "1,1,1", "1"),
        ("so_odd", "odd_orthogonal", "1,1,1", "1"),
        ("schur", "ordinary", "2,2,1", "1"),
        ("sp", "symplectic", "2,2", None),
        ("oe", "even_orthogonal", "2,1", None),
    ]
    for gname, tfam, lam_s, mu_s in cases:
        lam = P(lam_s)
        mu = P(mu_s) if mu_s else None
        nv = len(lam) - (len(mu) if mu else 0)
        assert character_gf(gname, lam, mu) == tableau_gf(
            tfam, lam, mu if mu else Partition(()), nv
        )


def test_non_containment_empty():
    assert tableau_gf("symplectic", P("3,2,2"), P("1,1"), 1).is_zero()
    assert list(iter_tableaux("ordinary", P("1,1"), P("2"), 2)) == []
