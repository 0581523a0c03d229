"""Weighted honeycomb graphs on a brick grid.

Vertices sit at (x, y) with x on the half-integer grid (stored doubled) and y
the zigzag-row number, increasing downwards.  Within a zigzag row a vertex is
"down" (carries a vertical edge to the row below) iff x = y+1 mod 2; slant
edges between consecutive columns are of kind "ne" (ascending left to right)
when their left endpoint is a down vertex, else "nw".  This one parity rule
reproduces all the alignment conventions of the trapezoidal and
half-trapezoidal families without drawing anything.

Builders:

  build_T        trapezoidal graph, optional top pendants for skew shapes
  build_ST       the same graph with weights mirrored right of a vertical line
  build_htm      left-justified half graph (symplectic side); hat variant adds
                 +1 to the first north-west edge of the even rows
  build_htp      right-justified half graph (orthogonal side); rightmost
                 vertical edges weigh 1/2, or 1 in the hat variant

Edge weights are Laurent polynomials in the graph's variables; pendant and
attachment edges always weigh 1.  A sign selector flips x_i to 1/x_i in every
edge weight.
"""

from __future__ import annotations

from fractions import Fraction

from .laurent import LaurentPoly

BUILDERS = ("T", "ST", "HTminus", "HHTminus", "HTplus", "HHTplus", "DT", "SDT")


class HoneycombGraph:
    __slots__ = ("vertices", "edges", "meta", "_by_coord", "_adj", "vclass")

    def __init__(self, meta=None):
        self.vertices = {}  # vid -> (x2, y)
        self.edges = {}  # eid -> [u, v, weight, kind, tag]
        self.meta = dict(meta or {})
        self._by_coord = {}
        self._adj = None
        self.vclass = None

    # ---------- construction ----------

    def vertex(self, x2, y):
        key = (int(x2), int(y))
        vid = self._by_coord.get(key)
        if vid is None:
            vid = len(self.vertices)
            self.vertices[vid] = key
            self._by_coord[key] = vid
        return vid

    def has_vertex(self, x2, y):
        return (int(x2), int(y)) in self._by_coord

    def vid_at(self, x2, y):
        return self._by_coord[(int(x2), int(y))]

    def add_edge(self, u, v, weight, kind, tag="core"):
        eid = len(self.edges)
        self.edges[eid] = [u, v, weight, kind, tag]
        self._adj = None
        return eid

    def finalize(self):
        """Assign bipartition classes by 2-coloring; raises if not bipartite."""
        color = {}
        for start in self.vertices:
            if start in color:
                continue
            color[start] = 0
            queue = [start]
            while queue:
                v = queue.pop()
                for e in self.incident(v):
                    u, w = self.edges[e][0], self.edges[e][1]
                    o = w if u == v else u
                    if o in color:
                        if color[o] == color[v]:
                            raise ValueError("graph is not bipartite")
                    else:
                        color[o] = 1 - color[v]
                        queue.append(o)
        self.vclass = color
        return self

    # ---------- queries ----------

    def adjacency(self):
        if self._adj is None:
            adj = {v: [] for v in self.vertices}
            for eid, (u, v, *_rest) in sorted(self.edges.items()):
                adj[u].append(eid)
                adj[v].append(eid)
            self._adj = adj
        return self._adj

    def incident(self, v):
        return self.adjacency()[v]

    def edge_weight(self, eid):
        return self.edges[eid][2]

    def nvars(self):
        return self.meta["nvars"]

    def copy(self):
        g = HoneycombGraph(self.meta)
        g.vertices = dict(self.vertices)
        g._by_coord = dict(self._by_coord)
        g.edges = {eid: list(rec) for eid, rec in self.edges.items()}
        g.vclass = dict(self.vclass) if self.vclass else None
        return g

    def flip_variables(self, indices):
        """Sign selector action: substitute x_i -> 1/x_i in every edge weight."""
        indices = [i for i in indices]
        g = self.copy()
        for rec in g.edges.values():
            w = rec[2]
            if isinstance(w, LaurentPoly):
                rec[2] = w.flip_vars(indices)
        sel = list(g.meta.get("sigma", [0] * g.meta.get("nvars", 0)))
        for i in indices:
            sel[i] ^= 1
        g.meta["sigma"] = sel
        return g

    def to_json(self):
        from .halfint import format_half

        def wjson(w):
            if isinstance(w, LaurentPoly):
                return w.to_json()
            from .halfint import format_fraction

            return format_fraction(w)

        return {
            "vertices": [
                {
                    "id": vid,
                    "x": format_half(x2),
                    "y": y,
                    "class": "positive" if (self.vclass or {}).get(vid, 0) == 0 else "negative",
                }
                for vid, (x2, y) in sorted(self.vertices.items())
            ],
            "edges": [
                {"id": eid, "u": u, "v": v, "weight": wjson(w), "kind": k, "tag": t}
                for eid, (u, v, w, k, t) in sorted(self.edges.items())
            ],
            "meta": {k: v for k, v in self.meta.items() if k != "row_weights"},
        }


def _down(x, y):
    """A vertex (x, y) carries a vertical edge to row y+1 iff this holds."""
    return (x - y - 1) % 2 == 0


def _add_zigzag(g, y, x_lo, x_hi, row_weight, one):
    """Slant edges between consecutive columns x_lo..x_hi of row y."""
    for x in range(x_lo, x_hi):
        u, v = g.vertex(2 * x, y), g.vertex(2 * (x + 1), y)
        if _down(x, y):
            g.add_edge(u, v, row_weight, "ne")
        else:
            g.add_edge(u, v, one, "nw")


def _zone_row_weights(axis_x, row_weights, one):
    """Weight lookup for split-weight graphs: (zone, kind, row) -> weight."""

    def weight(x_left, y, kind):
        # an edge spanning [x_left, x_left+1]: left zone iff it ends on or
        # before the axis, right zone iff it starts on or after it
        left = x_left + 1 <= axis_x
        if left:
            return row_weights[y - 1] if kind == "ne" else one
        return row_weights[y - 1] if kind == "nw" else one

    return weight


def build_T(n, k, p, q=None, row_weights=None, nvars=None, st_axis=None):
    """Trapezoidal graph with n zigzag rows and top row of k hexagons.

    Bottom pendants at positions p (1..n+k, left to right); optional top
    pendants at positions q (1..k) make the skew variant.  With st_axis = j
    the weights right of the vertical line through the j-th top peak are
    mirrored (north-west slants carry the row weight there).
    """
    if n < 1 or k < 1:
        raise ValueError("bad trapezoid parameters")
    q = list(q or ())
    p = list(p)
    if sorted(set(p)) != p or not all(1 <= v <= n + k for v in p):
        raise ValueError("bottom positions must be strictly increasing in 1..n+k")
    if sorted(set(q)) != q or not all(1 <= v <= k for v in q):
        raise ValueError("top positions must be strictly increasing in 1..k")
    g = HoneycombGraph(
        {
            "builder": "ST" if st_axis else "T",
            "n": n,
            "k": k,
            "p": p,
            "q": q,
            "j": st_axis,
            "nvars": nvars if nvars is not None else len(row_weights),
            "rows": n,
        }
    )
    one = LaurentPoly.one(g.meta["nvars"])
    axis_x = 2 * st_axis - 1 if st_axis else None
    if st_axis is not None and not 1 <= st_axis <= k:
        raise ValueError("dividing line out of range")

    def row_range(r):
        # the bottom row follows the same formula: its two extreme slants are
        # the added boundary edges of the trapezoid
        return (-(r - 1), 2 * k + r - 1)

    wfun = _zone_row_weights(axis_x, row_weights, one) if st_axis else None
    for r in range(1, n + 1):
        lo, hi = row_range(r)
        for x in range(lo, hi):
            u, v = g.vertex(2 * x, r), g.vertex(2 * (x + 1), r)
            kind = "ne" if _down(x, r) else "nw"
            if st_axis:
                w = wfun(x, r, kind)
            else:
                w = row_weights[r - 1] if kind == "ne" else one
            g.add_edge(u, v, w, kind)
    for r in range(1, n):
        lo, hi = row_range(r)
        for x in range(lo, hi + 1):
            if _down(x, r):
                g.add_edge(g.vertex(2 * x, r), g.vertex(2 * x, r + 1), one, "vert")

    anchors = {pos: (2 * (2 * pos - n - 1), n) for pos in range(1, n + k + 1)}
    for pos in p:
        x2, y = anchors[pos]
        g.add_edge(g.vertex(x2, y), g.vertex(x2, y + 1), one, "vert", "attach:%d" % pos)
    for pos in q:
        x2 = 2 * (2 * pos - 1)
        g.add_edge(g.vertex(x2, 0), g.vertex(x2, 1), one, "vert", "topattach:%d" % pos)
    g.meta["bottom_anchors"] = anchors
    return g.finalize()


def build_ST(n, k, j, p, q=None, row_weights=None, nvars=None):
    return build_T(n, k, p, q, row_weights, nvars, st_axis=j)


def build_htm(n2, k, p, row_weights=None, nvars=None, hat=False):
    """Left-justified half graph with n2 = 2n rows; hat adds 1 to the first
    north-west edge of every even row."""
    if n2 % 2 or n2 < 2 or k < 0:
        raise ValueError("bad half-trapezoid parameters")
    n = n2 // 2
    p = list(p)
    if sorted(set(p)) != p or not all(1 <= v <= n + k for v in p):
        raise ValueError("bottom positions must be strictly increasing in 1..n+k")
    g = HoneycombGraph(
        {
            "builder": "HHTminus" if hat else "HTminus",
            "n": n2,
            "k": k,
            "p": p,
            "nvars": nvars if nvars is not None else len(row_weights),
            "rows": n2,
        }
    )
    one = LaurentPoly.one(g.meta["nvars"])

    def row_end(r):
        # the bottom row's extra unit on the right is the added boundary slant
        return 2 * k if r == 1 else 2 * k + r - 1

    for r in range(1, n2 + 1):
        hi = row_end(r)
        for x in range(0, hi):
            u, v = g.vertex(2 * x, r), g.vertex(2 * (x + 1), r)
            kind = "ne" if _down(x, r) else "nw"
            w = row_weights[r - 1] if kind == "nw" else one
            if hat and kind == "nw" and x == 0 and r % 2 == 0:
                w = w + one
            g.add_edge(u, v, w, kind)
    for r in range(1, n2):
        # verticals of hexagon row r
        t = (r + 1) // 2
        xs = range(0, 2 * (k + t - 1) + 1, 2) if r % 2 else range(1, 2 * k + 2 * t, 2)
        for x in xs:
            g.add_edge(g.vertex(2 * x, r), g.vertex(2 * x, r + 1), one, "vert")

    anchors = {pos: (2 * (2 * pos - 1), n2) for pos in range(1, n + k + 1)}
    for pos in p:
        x2, y = anchors[pos]
        g.add_edge(g.vertex(x2, y), g.vertex(x2, y + 1), one, "vert", "attach:%d" % pos)
    g.meta["bottom_anchors"] = anchors
    return g.finalize()


def build_htp(n2, k, p, row_weights=None, nvars=None, hat=False):
    """Right-justified half graph; rightmost verticals carry 1/2 (1 if hat).

    Bottom positions are numbered 0..n+k from right to left; position 0 hangs
    below the bottom jut vertex and position n+k below the bottom-left pendant.
    """
    if n2 % 2 or n2 < 2 or k < 0:
        raise ValueError("bad half-trapezoid parameters")
    n = n2 // 2
    p = list(p)
    if sorted(set(p)) != p or not all(0 <= v <= n + k for v in p):
        raise ValueError("bottom positions must be strictly increasing in 0..n+k")
    g = HoneycombGraph(
        {
            "builder": "HHTplus" if hat else "HTplus",
            "n": n2,
            "k": k,
            "p": p,
            "nvars": nvars if nvars is not None else len(row_weights),
            "rows": n2,
        }
    )
    one = LaurentPoly.one(g.meta["nvars"])
    half = LaurentPoly.const(g.meta["nvars"], Fraction(1, 2))

    def row_span(r):
        # x = 1 is the boundary column; rows 1 and 2n reach it only through
        # their jutting boundary slants, the bottom row is also extended left
        return (-2 * k if r == 1 else -2 * k - r + 1, 1)

    for r in range(1, n2 + 1):
        lo, hi = row_span(r)
        for x in range(lo, hi):
            u, v = g.vertex(2 * x, r), g.vertex(2 * (x + 1), r)
            kind = "ne" if _down(x, r) else "nw"
            w = row_weights[r - 1] if kind == "ne" else one
            g.add_edge(u, v, w, kind)
    for r in range(1, n2):
        t = (r + 1) // 2
        if r % 2:
            xs = range(-2 * (k + t - 1), 1, 2)
        else:
            xs = range(-2 * k - 2 * t + 1, 2, 2)
        for x in xs:
            w = one
            if r % 2 == 0 and x == 1:
                w = one if hat else half
            g.add_edge(g.vertex(2 * x, r), g.vertex(2 * x, r + 1), w, "vert")

    anchors = {pos: (2 * (1 - 2 * pos), n2) for pos in range(0, n + k + 1)}
    for pos in p:
        x2, y = anchors[pos]
        # an attachment at position 0 is the rightmost vertical of the bottom
        # row, so it carries the same 1/2 as the other boundary verticals
        w = (one if hat else half) if pos == 0 else one
        g.add_edge(g.vertex(x2, y), g.vertex(x2, y + 1), w, "vert", "attach:%d" % pos)
    g.meta["bottom_anchors"] = anchors
    return g.finalize()


def glue_plus_minus(n2, k, p_plus, p_minus, row_weights):
    """Join the two half graphs back into the full trapezoid.

    The plus graph keeps columns x <= 1 of the trapezoid of width 2k+1, the
    minus graph the columns right of it; joining adds one slant per row.  The
    output carries the plain trapezoid weighting, so it compares equal to
    build_T(n2, 2k+1, ...) with the translated positions.
    """
    n = n2 // 2
    pos = sorted([n + k + 1 - v for v in p_plus] + [n + k + 1 + v for v in p_minus])
    return build_T(n2, 2 * k + 1, pos, None, row_weights)


def paired_row_weights(nvars, rows):
    """Row weights (x_1, 1/x_1, x_2, 1/x_2, ...) as Laurent monomials."""
    out = []
    for r in range(1, rows + 1):
        i = (r - 1) // 2
        out.append(LaurentPoly.var(nvars, i, 2 if r % 2 == 1 else -2))
    return out


def plain_row_weights(nvars, rows=None):
    """Row weights (x_1, ..., x_rows), one variable per row."""
    rows = rows if rows is not None else nvars
    return [LaurentPoly.var(nvars, r - 1, 2) for r in range(1, rows + 1)]


def build_graph(spec):
    """Dispatch a builder spec dict (the CLI surface).

    spec: {"builder": name, "n": rows, "k": ..., "p": [...], "q": [...],
           "j": ..., "weights": "rows"|"paired", "nvars": int,
           "sigma": [0/1 flags], "point": ["p/q", ...] for DT/SDT}
    """
    from .halfint import parse_fraction

    name = spec["builder"]
    n, k = spec["n"], spec["k"]
    p = spec.get("p", [])
    mode = spec.get("weights", "paired")
    if name in ("DT", "SDT"):
        from .doubling import build_DT, build_SDT

        point = [parse_fraction(s) for s in spec["point"]]
        if name == "DT":
            g = build_DT(n, k, p, point)
        else:
            g = build_SDT(n, k, spec["j"], p, point)
        return g
    if mode == "paired":
        if n % 2:
            raise ValueError("paired weights need an even row count")
        nv = n // 2
        rw = paired_row_weights(nv, n)
    else:
        nv = n
        rw = plain_row_weights(nv, n)
    if name == "T":
        g = build_T(n, k, p, spec.get("q"), rw, nv)
    elif name == "ST":
        g = build_ST(n, k, spec["j"], p, spec.get("q"), rw, nv)
    elif name == "HTminus":
        g = build_htm(n, k, p, rw, nv, hat=False)
    elif name == "HHTminus":
        g = build_htm(n, k, p, rw, nv, hat=True)
    elif name == "HTplus":
        g = build_htp(n, k, p, rw, nv, hat=False)
    elif name == "HHTplus":
        g = build_htp(n, k, p, rw, nv, hat=True)
    else:
        raise ValueError("unknown builder %r" % (name,))
    sigma = spec.get("sigma")
    if sigma:
        g = g.flip_variables([i for i, b in enumerate(sigma) if b])
    return g
