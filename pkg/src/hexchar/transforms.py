"""Graph transformations: reflective factorization and weight symmetrization.

`ciucu_factorize` cuts a weight-symmetric graph along its vertical axis into
the two halves whose matching generating functions multiply (times 2^n) to
the whole.  `symmetrize_bijection` is the deterministic bitstring version of
the averaging move that exchanges plain row weights for mirror-split weights
line by line; `sign_assignment` decorates the non-negative pattern of a
plus-family matching with starter signs and row flips so that the sum over
all sign selectors reproduces the even orthogonal character.
"""

from __future__ import annotations

from fractions import Fraction

from .graphbij import matching_to_pattern, pattern_to_matching
from .honeycomb import HoneycombGraph
from .laurent import LaurentPoly
from .patterns import Pattern, j_involution


# ---------------------------------------------------------------------------
# Reflective symmetry factorization
# ---------------------------------------------------------------------------


def _weight_eq(a, b):
    if isinstance(a, LaurentPoly) and isinstance(b, LaurentPoly):
        return a == b
    if isinstance(a, LaurentPoly) or isinstance(b, LaurentPoly):
        return False
    return Fraction(a) == Fraction(b)


def check_axis_symmetry(g, axis_x2):
    """Verify that reflection about x = axis is a weight-preserving
    automorphism; returns the axis vertex ids top to bottom."""
    reflect = {}
    for vid, (x2, y) in g.vertices.items():
        rx = 2 * axis_x2 - x2
        if (rx, y) not in g._by_coord:
            raise ValueError("vertex set is not symmetric about the axis")
        reflect[vid] = g.vid_at(rx, y)
    seen = {}
    for _eid, (u, v, w, _k, _t) in g.edges.items():
        key = frozenset((reflect[u], reflect[v]))
        seen.setdefault(key, []).append(w)
    for _eid, (u, v, w, _k, _t) in g.edges.items():
        mirrored = seen.get(frozenset((u, v)))
        if not mirrored or not any(_weight_eq(w, w2) for w2 in mirrored):
            raise ValueError("edge weights are not symmetric about the axis")
    axis = [vid for vid, (x2, _y) in g.vertices.items() if x2 == axis_x2]
    return sorted(axis, key=lambda vid: g.vertices[vid][1])


def ciucu_factorize(g, axis_x2=None):
    """Cut along the symmetry axis; returns (gplus, gminus, n_axis_pairs).

    The top axis vertex is declared positive; with alternating classes down
    the axis every vertex is cut on the right, so the left graph keeps the
    axis vertices and the halved axis edges.
    """
    if axis_x2 is None:
        if "axis_x2" in g.meta:
            axis_x2 = g.meta["axis_x2"]
        else:
            j = g.meta.get("j")
            if j is None:
                raise ValueError("no axis declared for this graph")
            axis_x2 = 2 * (2 * j - 1)
    axis = check_axis_symmetry(g, axis_x2)
    if len(axis) % 2:
        raise ValueError("odd number of axis vertices")
    pos_class = g.vclass[axis[0]]
    for idx, vid in enumerate(axis):
        want = pos_class if idx % 2 == 0 else 1 - pos_class
        if g.vclass[vid] != want:
            raise ValueError("axis vertex classes do not alternate")

    def side(vid):
        return g.vertices[vid][0] - axis_x2  # <0 left, 0 axis, >0 right

    gplus = HoneycombGraph({**g.meta, "piece": "plus"})
    gminus = HoneycombGraph({**g.meta, "piece": "minus"})
    for vid, (x2, y) in sorted(g.vertices.items()):
        if x2 <= axis_x2:
            gplus.vertex(x2, y)
        if x2 > axis_x2:
            gminus.vertex(x2, y)
    for _eid, (u, v, w, kind, tag) in sorted(g.edges.items()):
        su, sv = side(u), side(v)
        (xu, yu), (xv, yv) = g.vertices[u], g.vertices[v]
        if su == 0 and sv == 0:
            half = w.scale(Fraction(1, 2)) if isinstance(w, LaurentPoly) else Fraction(w) / 2
            gplus.add_edge(gplus.vid_at(xu, yu), gplus.vid_at(xv, yv), half, kind, tag)
        elif su <= 0 and sv <= 0:
            gplus.add_edge(gplus.vid_at(xu, yu), gplus.vid_at(xv, yv), w, kind, tag)
        elif su > 0 and sv > 0:
            gminus.add_edge(gminus.vid_at(xu, yu), gminus.vid_at(xv, yv), w, kind, tag)
        # edges from the axis to the right are cut
    return gplus.finalize(), gminus.finalize(), len(axis) // 2


def graphs_coord_isomorphic(g1, g2, dx2=0, dy=0):
    """Equality of graphs as coordinate-embedded weighted edge sets,
    after shifting g1 by (dx2, dy)."""
    v1 = {(x2 + dx2, y) for (x2, y) in g1.vertices.values()}
    v2 = set(g2.vertices.values())
    if v1 != v2:
        return False

    def edge_keys(g, ddx, ddy):
        out = {}
        for _eid, (u, v, w, kind, _t) in g.edges.items():
            cu = tuple(a + b for a, b in zip(g.vertices[u], (ddx, ddy)))
            cv = tuple(a + b for a, b in zip(g.vertices[v], (ddx, ddy)))
            out.setdefault(frozenset((cu, cv)), []).append((kind, w))
        return out

    e1, e2 = edge_keys(g1, dx2, dy), edge_keys(g2, 0, 0)
    if set(e1) != set(e2):
        return False
    for key in e1:
        a, b = e1[key], e2[key]
        if len(a) != len(b):
            return False
        for kind, w in a:
            if not any(kind == k2 and _weight_eq(w, w2) for k2, w2 in b):
                return False
    return True


# ---------------------------------------------------------------------------
# The bitstring symmetrization of trapezoid matchings
# ---------------------------------------------------------------------------


class SymState:
    """A matching of the sigma-twisted graph plus the side-choice bits."""

    __slots__ = ("sigma", "matching", "bits")

    def __init__(self, sigma, matching, bits):
        self.sigma = tuple(sigma)
        self.matching = tuple(sorted(matching))
        self.bits = tuple(bits)

    def __eq__(self, other):
        return (
            isinstance(other, SymState)
            and self.sigma == other.sigma
            and self.matching == other.matching
            and self.bits == other.bits
        )

    def __hash__(self):
        return hash((self.sigma, self.matching, self.bits))

    def __repr__(self):
        return "SymState(sigma=%s, m=%s, bits=%s)" % (self.sigma, self.matching, self.bits)


def _matched_partner(g, matched_of, vid):
    e = matched_of.get(vid)
    if e is None:
        return None, None
    u, v = g.edges[e][0], g.edges[e][1]
    return e, (v if u == vid else u)


def symmetrize_bijection(g, state, j):
    """Map a state of the plain trapezoid to the split-weight one (and back).

    g is the underlying trapezoid structure (2n rows, top width k); j indexes
    the dividing line through the j-th top peak.  The map mirrors, within
    each odd hexagon row on the chosen side of the line, every section whose
    boundary columns are matched away from the row and which contains exactly
    one matched vertical.  It is an involution on states; the side count of
    rows split across the line is preserved.
    """
    n2, k = g.meta["rows"], g.meta["k"]
    n = n2 // 2
    axis = 2 * j - 1
    if not 1 <= j <= k:
        raise ValueError("dividing line out of range")
    matched_of = {}
    for e in state.matching:
        matched_of[g.edges[e][0]] = e
        matched_of[g.edges[e][1]] = e
    matching = set(state.matching)
    sigma = list(state.sigma)

    for i in range(1, n + 1):
        ru, rl = 2 * i - 1, 2 * i  # the zigzag rows of odd hexagon row ru
        side = _row_side(g, matched_of, axis, ru, rl, state.bits[i - 1])
        if side == "L":
            sigma[i - 1] ^= 1
        _mirror_side(g, matching, matched_of, axis, ru, rl, side)

    new_matched = tuple(sorted(matching))
    return SymState(sigma, new_matched, state.bits)


def _row_side(g, matched_of, axis, ru, rl, bit):
    su = sv = None
    if g.has_vertex(2 * axis, ru):
        e, p = _matched_partner(g, matched_of, g.vid_at(2 * axis, ru))
        if p is not None and g.vertices[p][1] == ru:
            su = "L" if g.vertices[p][0] < 2 * axis else "R"
    if g.has_vertex(2 * axis, rl):
        e, p = _matched_partner(g, matched_of, g.vid_at(2 * axis, rl))
        if p is not None and g.vertices[p][1] == rl:
            sv = "L" if g.vertices[p][0] < 2 * axis else "R"
    if su is not None and su == sv:
        return "R" if su == "L" else "L"
    return "R" if bit else "L"


def _row_dividers(g, matched_of, axis, ru, rl):
    """Odd columns where a row vertex is matched away from the hexagon row."""
    cols = {axis}
    xs = [x2 // 2 for (x2, y) in g.vertices.values() if y in (ru, rl)]
    lo, hi = min(xs) - 1, max(xs) + 1
    lo = lo if lo % 2 else lo - 1
    hi = hi if hi % 2 else hi + 1
    cols.update((lo, hi))
    for x in range(lo + 2, hi, 2):
        for row, other in ((ru, ru - 1), (rl, rl + 1)):
            if not g.has_vertex(2 * x, row):
                continue
            e, p = _matched_partner(g, matched_of, g.vid_at(2 * x, row))
            if p is not None and g.vertices[p][1] == other:
                cols.add(x)
    return sorted(cols), lo, hi


def _mirror_side(g, matching, matched_of, axis, ru, rl, side):
    cols, lo, hi = _row_dividers(g, matched_of, axis, ru, rl)
    for c, d in zip(cols, cols[1:]):
        if side == "L" and not d <= axis:
            continue
        if side == "R" and not c >= axis:
            continue
        _mirror_section(g, matching, matched_of, ru, rl, c, d)


def _section_edges(g, ru, rl, c, d):
    """Edges of the two zigzag rows and their verticals within columns [c, d]."""
    out = []
    for eid, (u, v, _w, kind, _t) in g.edges.items():
        (xu, yu), (xv, yv) = g.vertices[u], g.vertices[v]
        if kind == "vert":
            if yu != ru and yv != ru:
                continue
            if {yu, yv} != {ru, rl}:
                continue
            if c < xu // 2 < d:
                out.append(eid)
        else:
            if yu == yv and yu in (ru, rl) and c <= min(xu, xv) // 2 and max(xu, xv) // 2 <= d:
                out.append(eid)
    return out


def _mirror_section(g, matching, matched_of, ru, rl, c, d):
    local = _section_edges(g, ru, rl, c, d)
    matched_local = [e for e in local if e in matching]
    verticals = [e for e in matched_local if g.edges[e][3] == "vert"]
    if len(verticals) != 1:
        return  # pure slant sections carry weight 1 either way
    # mirror x -> c + d - x within the section
    covered = set()
    for e in matched_local:
        covered.add(g.edges[e][0])
        covered.add(g.edges[e][1])
    cov_coords = {g.vertices[v] for v in covered}
    mirrored_cov = {(2 * (c + d) - x2, y) for (x2, y) in cov_coords}
    if mirrored_cov != cov_coords:
        raise ValueError("section with one vertical is not mirror-symmetric")
    edge_at = {}
    for e in local:
        (xu, yu), (xv, yv) = g.vertices[g.edges[e][0]], g.vertices[g.edges[e][1]]
        edge_at[frozenset(((xu, yu), (xv, yv)))] = e
    new_local = []
    for e in matched_local:
        (xu, yu), (xv, yv) = g.vertices[g.edges[e][0]], g.vertices[g.edges[e][1]]
        key = frozenset(((2 * (c + d) - xu, yu), (2 * (c + d) - xv, yv)))
        new_local.append(edge_at[key])
    for e in matched_local:
        matching.discard(e)
        matched_of.pop(g.edges[e][0], None)
        matched_of.pop(g.edges[e][1], None)
    for e in new_local:
        matching.add(e)
        matched_of[g.edges[e][0]] = e
        matched_of[g.edges[e][1]] = e


def count_split_rows(g, state, j):
    """Rows where the side choice is free (the line splits the row)."""
    n2 = g.meta["rows"]
    axis = 2 * j - 1
    matched_of = {}
    for e in state.matching:
        matched_of[g.edges[e][0]] = e
        matched_of[g.edges[e][1]] = e
    count = 0
    for i in range(1, n2 // 2 + 1):
        ru, rl = 2 * i - 1, 2 * i
        sides = []
        for row in (ru, rl):
            if not g.has_vertex(2 * axis, row):
                sides.append(None)
                continue
            _e, p = _matched_partner(g, matched_of, g.vid_at(2 * axis, row))
            if p is None or g.vertices[p][1] != row:
                sides.append(None)
            else:
                sides.append("L" if g.vertices[p][0] < 2 * axis else "R")
        if not (sides[0] is not None and sides[0] == sides[1]):
            count += 1
    return count


# ---------------------------------------------------------------------------
# Sign assignment for plus-family matchings
# ---------------------------------------------------------------------------


def sign_assignment(g, matching, sigma):
    """(matching of a plus graph, sign selector) -> (signed pattern, bits).

    Starting from the non-negative pattern of the matching, walk the variable
    indices: positive odd starters take the sign demanded by the selector
    relative to the previous starter; zero starters flip the row between them
    instead, recording one bit per zero starter.
    """
    p = matching_to_pattern(g, matching)
    n = p.n
    rows = dict(p.rows)
    bits = []
    prev_sign = 1  # sign of the starter two odd rows above; +1 off the top
    for i in range(1, n + 1):
        eps = sigma[i - 1]
        R = 2 * i - 1
        starter = rows[R][0]
        if starter > 0:
            sign = -prev_sign if eps else prev_sign
            if sign < 0:
                rows[R] = (-starter,) + rows[R][1:]
            prev_sign = sign
        else:
            apply_flip = (eps == 1 and prev_sign >= 0) or (eps == 0 and prev_sign < 0)
            if apply_flip and i >= 2:
                q = j_involution(Pattern("even_orthogonal", n, 0, rows), i)
                rows = dict(q.rows)
            bits.append(1 if (apply_flip and i >= 2) else (eps if i == 1 else 0))
            prev_sign = 1
    return Pattern("even_orthogonal", n, 0, rows), tuple(bits)


def sign_assignment_inverse(g, pattern, bits):
    """Recover (matching, sigma) from a signed pattern plus its bits."""
    n = pattern.n
    rows = dict(pattern.rows)
    sigma = []
    bits = list(bits)
    prev_sign = 1
    for i in range(1, n + 1):
        R = 2 * i - 1
        starter = rows[R][0]
        if starter != 0:
            eps = 1 if (starter < 0) != (prev_sign < 0) else 0
            sigma.append(eps)
            prev_sign = -1 if starter < 0 else 1
            if starter < 0:
                rows[R] = (-starter,) + rows[R][1:]
        else:
            b = bits.pop(0)
            if i == 1:
                sigma.append(b)
            else:
                if b:
                    q = j_involution(Pattern("even_orthogonal", n, 0, rows), i)
                    rows = dict(q.rows)
                    eps = 1 if prev_sign >= 0 else 0
                else:
                    eps = 0 if prev_sign >= 0 else 1
                sigma.append(eps)
            prev_sign = 1
    nonneg = Pattern("even_orthogonal", n, 0, rows)
    return pattern_to_matching(g, nonneg), tuple(sigma)
