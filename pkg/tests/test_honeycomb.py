"""Honeycomb graph builders and matching generating functions."""

import itertools
from fractions import Fraction

import pytest

from hexchar.honeycomb import (
    build_T,
    build_htm,
    build_htp,
    build_graph,
    glue_plus_minus,
    paired_row_weights,
    plain_row_weights,
)
from hexchar.laurent import LaurentPoly
from hexchar.matchings import (
    KERNEL,
    complete_matching,
    enumerate_matchings,
    matching_gf,
    matching_weight,
)
from hexchar.partitions import Partition
from hexchar.patterns import character_gf, count_patterns
from hexchar.transforms import graphs_coord_isomorphic


def hexagon_row_lengths(g):
    """Hexagon counts per row, derived from the vertical-edge columns."""
    rows = {}
    for _e, (u, v, _w, kind, tag) in g.edges.items():
        if kind != "vert" or tag != "core":
            continue
        y = min(g.vertices[u][1], g.vertices[v][1])
        rows.setdefault(y, []).append(g.vertices[u][0])
    return [len(rows[y]) - 1 for y in sorted(rows)]


def test_T68_row_lengths():
    g = build_T(6, 8, [1, 4, 7, 8, 11, 14], None, plain_row_weights(6), 6)
    assert hexagon_row_lengths(g) == [8, 9, 10, 11, 12]


def test_htminus_62_row_lengths():
    g = build_htm(6, 2, [2, 3, 5], paired_row_weights(3, 6), 3)
    assert hexagon_row_lengths(g) == [2, 2, 3, 3, 4]


def test_T_vertex_edge_counts_golden():
    g = build_T(2, 1, [1, 2], None, plain_row_weights(2), 2)
    assert (len(g.vertices), len(g.edges)) == (10, 10)


def test_schur_matching_gf():
    # M(T) is the Schur polynomial of the positions, over the full grid
    for n in (1, 2, 3):
        for lam_t in itertools.combinations_with_replacement(range(3), n):
            lam = Partition.from_ints(tuple(sorted(lam_t, reverse=True)))
            k = max(lam.twice[0] // 2, 1)
            pos = [lam.twice[n - 1 - i] // 2 + i + 1 for i in range(n)]
            g = build_T(n, k, pos, None, plain_row_weights(n), n)
            assert matching_gf(g) == character_gf("schur", lam)


def test_skew_trapezoid_gf():
    # top pendants encode the inner shape
    lam, mu = Partition.parse("2,2,1"), Partition.parse("1")
    n, m = 3, 1
    p = [lam.twice[n - 1 - i] // 2 + i + 1 for i in range(n)]
    q = [mu.twice[m - 1 - i] // 2 + i + 1 for i in range(m)]
    g = build_T(n - m, lam.twice[0] // 2 + m, p, q, plain_row_weights(n - m), n - m)
    assert matching_gf(g) == character_gf("schur", lam, mu)


def test_T_with_top_equal_bottom_is_forced():
    g = build_T(1, 2, [1, 2], [1, 2], plain_row_weights(1), 1)
    assert matching_gf(g) == LaurentPoly.one(1)


def test_single_edge_and_hexagon():
    from hexchar.honeycomb import HoneycombGraph

    g = HoneycombGraph({"nvars": 1})
    w = LaurentPoly.var(1, 0)
    g.add_edge(g.vertex(0, 0), g.vertex(0, 1), w, "vert")
    g.finalize()
    assert matching_gf(g) == w

    c = HoneycombGraph({"nvars": 0})
    vs = [c.vertex(x, y) for x, y in [(0, 0), (1, 0), (2, 0), (0, 1), (1, 1), (2, 1)]]
    one = LaurentPoly.one(0)
    for a, b in [(0, 1), (1, 2), (3, 4), (4, 5), (0, 3), (2, 5)]:
        c.add_edge(vs[a], vs[b], one, "ne")
    c.finalize()
    assert matching_gf(c) == LaurentPoly.const(0, 2)
    assert len(enumerate_matchings(c)) == 2


def test_path_one_matching():
    from hexchar.honeycomb import HoneycombGraph

    g = HoneycombGraph({"nvars": 0})
    g.add_edge(g.vertex(0, 0), g.vertex(1, 0), LaurentPoly.one(0), "ne")
    g.finalize()
    assert len(enumerate_matchings(g)) == 1


def test_kernels_agree():
    g = build_htp(6, 1, [1, 2, 4], paired_row_weights(3, 6), 3)
    assert enumerate_matchings(g, "compiled" if KERNEL == "compiled" else "python") == \
        enumerate_matchings(g, "python")


def test_htm_count_matches_patterns():
    g = build_htm(6, 2, [2, 3, 5], paired_row_weights(3, 6), 3)
    assert len(enumerate_matchings(g)) == count_patterns("sp", Partition.parse("2,1,1"))


def test_complete_matching_unique_and_errors():
    g = build_T(2, 1, [1, 3], None, plain_row_weights(2), 2)
    verts = [e for e, rec in g.edges.items() if rec[3] == "vert" and rec[4] == "core"]
    m = complete_matching(g, verts[:1])
    assert set(verts[:1]) <= set(m)
    with pytest.raises(ValueError):
        complete_matching(g, [])  # a free hexagon remains


def test_glue_plus_minus():
    rw = paired_row_weights(1, 2)
    glued = glue_plus_minus(2, 1, [1], [2], rw)
    ref = build_T(2, 3, [1, 4], None, rw, 1)
    assert graphs_coord_isomorphic(glued, ref)
    # symmetric choice gives an axis-symmetric trapezoid
    g2 = glue_plus_minus(2, 1, [2], [2], rw)
    from hexchar.transforms import check_axis_symmetry

    rw_t = [LaurentPoly.one(1)] * 2
    g2u = glue_plus_minus(2, 1, [2], [2], rw_t)
    assert check_axis_symmetry(g2u, 2 * 3)
    # vertex count bookkeeping against the translated trapezoid
    rw2 = paired_row_weights(2, 4)
    glued2 = glue_plus_minus(4, 2, [1, 3], [2, 4], rw2)
    ref2 = build_T(4, 5, [4, 6, 9, 11], None, rw2, 2)
    assert len(glued2.vertices) == len(ref2.vertices)
    assert graphs_coord_isomorphic(glued2, ref2)


def test_T68_figure_matching_weight():
    # the matching of the staircase tableau, built from its pattern
    from hexchar.graphbij import pattern_to_matching
    from hexchar.patterns import Pattern

    g = build_T(6, 8, [1, 4, 7, 8, 11, 14], None, plain_row_weights(6), 6)
    rows = {
        1: (6,),
        2: (4, 10),
        3: (2, 8, 10),
        4: (0, 8, 8, 10),
        5: (0, 4, 8, 10, 14),
        6: (0, 4, 8, 8, 12, 16),
    }
    p = Pattern("gt", 6, 0, rows)
    m = pattern_to_matching(g, p)
    assert matching_weight(g, m) == LaurentPoly.monomial(6, (6, 8, 6, 6, 10, 12))


def test_build_graph_dispatch():
    spec = {"builder": "HTminus", "n": 4, "k": 1, "p": [1, 3], "weights": "paired"}
    g = build_graph(spec)
    assert matching_gf(g) == character_gf("sp", Partition.parse("1,0"))
    spec2 = {**spec, "sigma": [1, 0]}
    g2 = build_graph(spec2)
    assert matching_gf(g2) == character_gf("sp", Partition.parse("1,0"))


def test_out_of_range_positions():
    with pytest.raises(ValueError):
        build_T(2, 1, [1, 4], None, plain_row_weights(2), 2)
    with pytest.raises(ValueError):
        build_htp(4, 1, [0, 4], paired_row_weights(2, 4), 2)
