"""The local doubling rewrite and the doubled trapezoid graphs.

A vertical edge of weight t whose endpoints T (top) and B (bottom) carry
outer slants a, y at T and b, z at B is replaced by a hexagon

        r_y --y1-- T --a1-- P_t --y2-- ur --a2-- r_a
                   |m                  |m
        r_b --b1-- B --z1-- P_b --b2-- lr --z2-- r_z

whose two vertical sides both weigh m = t / (a1*z1 + b2*y2); the splits must
multiply back to the original slant weights (a1*a2 = a and so on, with a2 or
y1 equal to 0 when the boundary slant is absent).  For every subset of the
connecting points the gadget's internal matching generating function equals
that of the replaced configuration

    {} -> t,  {a,b} -> ab,  {a,z} -> az,  {y,b} -> yb,  {y,z} -> yz,

and 0 on the impossible subsets, so the rewrite preserves the matching
generating function of any ambient graph.  All weights are exact rationals:
the doubled graphs are evaluated at points x_i = s_i^2, never symbolically,
because the middle weights are not Laurent monomials.

Applying the rewrite with a1 = a2 = sqrt(x_r), b1 = b2 = sqrt(x_{r+1}),
y2 = z1 = z2 = t = 1 to every vertical of the odd rows of a trapezoid graph
gives DT, whose odd rows are again uniform zigzag rows, of doubled width,
with north-east slants weighted by square roots.  SDT mirrors the slant
weights right of the line through the j-th top peak (1 <= j <= 2k+1) and
leaves every vertical weight unchanged.
"""

from __future__ import annotations

from fractions import Fraction

from .halfint import fraction_sqrt
from .honeycomb import HoneycombGraph
from .laurent import LaurentPoly


class RewriteParams:
    """Split weights for one vertical-edge rewrite."""

    __slots__ = ("a1", "a2", "b1", "b2", "y1", "y2", "z1", "z2", "t")

    def __init__(self, a1, a2, b1, b2, y1, y2, z1, z2, t):
        self.a1, self.a2 = Fraction(a1), Fraction(a2)
        self.b1, self.b2 = Fraction(b1), Fraction(b2)
        self.y1, self.y2 = Fraction(y1), Fraction(y2)
        self.z1, self.z2 = Fraction(z1), Fraction(z2)
        self.t = Fraction(t)
        if self.denom() == 0:
            raise ValueError("vanishing middle denominator")

    def denom(self):
        return self.a1 * self.z1 + self.b2 * self.y2

    def middle(self):
        return self.t / self.denom()

    def products(self):
        return (self.a1 * self.a2, self.y1 * self.y2, self.b1 * self.b2, self.z1 * self.z2)


def _as_fraction(w):
    if isinstance(w, LaurentPoly):
        return w.as_fraction()
    return Fraction(w)


def _outer_edges(g, eid):
    """The four slant edges around a vertical edge, keyed a/y (top), b/z (bottom)."""
    u, v = g.edges[eid][0], g.edges[eid][1]
    (xu, yu), (xv, yv) = g.vertices[u], g.vertices[v]
    if xu != xv or abs(yu - yv) != 1:
        raise ValueError("not a vertical edge")
    top, bot = (u, v) if yu < yv else (v, u)
    x2 = xu
    found = {"a": None, "y": None, "b": None, "z": None}
    for f in g.incident(top):
        if f == eid or g.edges[f][3] == "vert":
            continue
        ou = g.edges[f][0] if g.edges[f][1] == top else g.edges[f][1]
        found["a" if g.vertices[ou][0] > x2 else "y"] = f
    for f in g.incident(bot):
        if f == eid or g.edges[f][3] == "vert":
            continue
        ou = g.edges[f][0] if g.edges[f][1] == bot else g.edges[f][1]
        found["z" if g.vertices[ou][0] > x2 else "b"] = f
    return top, bot, found


def _gadget_into(out, coord_of, top_c, bot_c, far, params, row):
    """Emit the gadget for a vertical whose mapped corners are top_c/bot_c.

    far maps the slant keys to mapped connector coordinates (or None).
    Slants are tagged with their zigzag row for the mirror-split reweighting.
    """
    X, yt = top_c
    yb = bot_c[1]
    m = params.middle()
    pt, ur = (X + 2, yt), (X + 4, yt)
    pb, lr = (X + 2, yb), (X + 4, yb)

    def add(ca, cb, w, kind, tag):
        if w != 0:
            out.add_edge(out.vertex(*ca), out.vertex(*cb), w, kind, tag)

    add(top_c, pt, params.a1, "ne", "dslant:%d" % yt)
    add(pt, ur, params.y2, "nw", "dslant:%d" % yt)
    add(bot_c, pb, params.z1, "nw", "dslant:%d" % yb)
    add(pb, lr, params.b2, "ne", "dslant:%d" % yb)
    add(top_c, bot_c, m, "vert", "gadget")
    add(ur, lr, m, "vert", "gadget")
    if far["y"] is not None:
        add(far["y"], top_c, params.y1, "nw", "dslant:%d" % yt)
    if far["a"] is not None:
        add(ur, far["a"], params.a2, "ne", "dslant:%d" % yt)
    if far["b"] is not None:
        add(far["b"], bot_c, params.b1, "ne", "dslant:%d" % yb)
    if far["z"] is not None:
        add(lr, far["z"], params.z2, "nw", "dslant:%d" % yb)


def _doubled_copy(g, rewrites):
    """Copy g with coordinates doubled and the given verticals rewritten.

    rewrites: eid -> RewriteParams.  Endpoints of rewritten verticals keep
    coordinate 2x; all other vertices shift to 2x + 2, which keeps the
    untouched verticals aligned and makes room for the gadget corners.
    """
    ends = set()
    for eid in rewrites:
        ends.add(g.edges[eid][0])
        ends.add(g.edges[eid][1])

    def mapped(vid):
        x2, y = g.vertices[vid]
        return (2 * x2 if vid in ends else 2 * x2 + 2, y)

    out = HoneycombGraph({**g.meta, "doubled": True})
    for vid in sorted(g.vertices):
        out.vertex(*mapped(vid))
    skip = set(rewrites)
    outer_of = {}
    for eid, params in rewrites.items():
        top, bot, outer = _outer_edges(g, eid)
        outer_of[eid] = (top, bot, outer)
        skip |= {f for f in outer.values() if f is not None}
    for eid, (u, v, w, kind, tag) in sorted(g.edges.items()):
        if eid in skip:
            continue
        out.add_edge(out.vertex(*mapped(u)), out.vertex(*mapped(v)), _as_fraction(w), kind, tag)
    for eid, params in rewrites.items():
        top, bot, outer = outer_of[eid]
        far = {}
        for key, f in outer.items():
            if f is None:
                far[key] = None
            else:
                u, v = g.edges[f][0], g.edges[f][1]
                far[key] = mapped(u if v in (top, bot) else v)
        actual = {
            key: (_as_fraction(g.edges[f][2]) if f is not None else Fraction(0))
            for key, f in outer.items()
        }
        prods = dict(zip("aybz", params.products()))
        for key in "aybz":
            if prods[key] != actual[key]:
                raise ValueError("split weights do not multiply to the %s-slant weight" % key)
        if params.t != _as_fraction(g.edges[eid][2]):
            raise ValueError("t does not match the vertical edge weight")
        _gadget_into(out, None, mapped(top), mapped(bot), far, params, None)
    return out.finalize()


def local_double_rewrite(g, eid, params):
    """Replace one vertical edge by the gadget; coordinates double."""
    return _doubled_copy(g, {eid: params})


def _sqrt_or_raise(q):
    r = fraction_sqrt(q)
    if r is None:
        raise ValueError("doubled graphs need point values with exact square roots")
    return r


def build_DT(n, k, p, xs):
    """The doubled trapezoid at the exact point xs (one value per row)."""
    from .honeycomb import build_T

    xs = [Fraction(v) for v in xs]
    roots = [_sqrt_or_raise(v) for v in xs]
    base = build_T(n, k, p, None, [LaurentPoly.const(0, v) for v in xs], 0)
    rewrites = {}
    for eid, (u, v, w, kind, tag) in base.edges.items():
        if kind != "vert" or tag != "core":
            continue
        yt = min(base.vertices[u][1], base.vertices[v][1])
        if yt % 2 == 1:
            _top, _bot, outer = _outer_edges(base, eid)
            rewrites[eid] = RewriteParams(
                roots[yt - 1],
                roots[yt - 1] if outer["a"] is not None else 0,
                roots[yt],
                roots[yt],
                Fraction(1) if outer["y"] is not None else 0,
                Fraction(1),
                Fraction(1),
                Fraction(1),
                Fraction(1),
            )
    out = _doubled_copy(base, rewrites)
    out.meta = {**out.meta, "builder": "DT", "point": xs, "nvars": 0}
    return out


def build_SDT(n, k, j, p, xs):
    """DT with slant weights mirrored right of the j-th top-peak line."""
    if not 1 <= j <= 2 * k + 1:
        raise ValueError("dividing line out of range")
    xs = [Fraction(v) for v in xs]
    roots = [_sqrt_or_raise(v) for v in xs]
    g = build_DT(n, k, p, xs)
    axis_x2 = 4 * (j - 1) + 2
    g.meta = {**g.meta, "builder": "SDT", "j": j, "axis_x2": axis_x2}
    for eid, rec in g.edges.items():
        u, v, w, kind, tag = rec
        if not tag.startswith("dslant:"):
            continue
        row = int(tag.split(":")[1])
        if min(g.vertices[u][0], g.vertices[v][0]) < axis_x2:
            continue  # left zone keeps the doubled weights
        rec[2] = roots[row - 1] if kind == "nw" else Fraction(1)
    return g


def sigma_point(xs, flips):
    """Swap the paired row values (x_i, 1/x_i) for each flipped selector bit."""
    out = list(xs)
    for i, b in enumerate(flips):
        if b:
            out[2 * i], out[2 * i + 1] = out[2 * i + 1], out[2 * i]
    return out


# ---------------------------------------------------------------------------
# The five-class local contract
# ---------------------------------------------------------------------------


def gadget_class_gfs(params):
    """GF of the standalone gadget for every subset of covered connectors."""
    from itertools import combinations

    from ._matchcore_py import list_matchings

    out_graph = HoneycombGraph({"nvars": 0})
    far = {"y": (-4, 0), "a": (8, 0), "b": (-4, 1), "z": (8, 1)}
    far_in = {key: (far[key] if w != 0 else None) for key, w in
              zip("aybz", (params.a2, params.y1, params.b1, params.z2))}
    _gadget_into(out_graph, None, (0, 0), (0, 1), far_in, params, None)
    connector = {k: out_graph._by_coord.get(far[k]) for k in "aybz"}
    connector = {k: v for k, v in connector.items() if v is not None}

    out = {}
    keys = sorted(connector)
    nall = len(out_graph.vertices)
    for rsize in range(len(keys) + 1):
        for subset in combinations(keys, rsize):
            drop = {connector[k] for k in keys if k not in subset}
            keep = [v for v in range(nall) if v not in drop]
            remap = {v: i for i, v in enumerate(keep)}
            e2u, e2v, w2 = [], [], []
            for _eid, (a, b, w, _k, _t) in out_graph.edges.items():
                if a in remap and b in remap:
                    e2u.append(remap[a])
                    e2v.append(remap[b])
                    w2.append(w)
            total = Fraction(0)
            for m in list_matchings(len(keep), e2u, e2v):
                prod = Fraction(1)
                for e in m:
                    prod *= w2[e]
                total += prod
            out[frozenset(subset)] = total
    return out


def expected_class_gfs(params, present):
    """The replaced configuration's local GFs for the same subsets."""
    from itertools import combinations

    a, y, b, z = params.products()
    table = {
        frozenset(): params.t,
        frozenset("ab"): a * b,
        frozenset("az"): a * z,
        frozenset("yb"): y * b,
        frozenset("yz"): y * z,
    }
    out = {}
    keys = sorted(present)
    for rsize in range(len(keys) + 1):
        for subset in combinations(keys, rsize):
            out[frozenset(subset)] = table.get(frozenset(subset), Fraction(0))
    return out
