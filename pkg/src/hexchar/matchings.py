"""Matching enumeration and matching generating functions.

The enumeration kernel is the compiled extension when available, otherwise
the pure-Python twin; `KERNEL` names the one in use.  Matchings are sorted
tuples of edge ids, streamed in a fixed deterministic order.
"""

from __future__ import annotations

from fractions import Fraction

from .laurent import LaurentPoly

try:  # pragma: no cover - which kernel loads depends on the build
    from . import _matchcore as _kernel

    KERNEL = "compiled"
except ImportError:  # pragma: no cover
    from . import _matchcore_py as _kernel

    KERNEL = "python"

from . import _matchcore_py as _kernel_py


def _edge_arrays(g):
    eids = sorted(g.edges)
    # edge ids are dense and sorted by construction
    eu = [g.edges[e][0] for e in eids]
    ev = [g.edges[e][1] for e in eids]
    return eu, ev


def enumerate_matchings(g, kernel=None):
    """All perfect matchings of g, each a sorted tuple of edge ids."""
    eu, ev = _edge_arrays(g)
    impl = {"compiled": _kernel, "python": _kernel_py, None: _kernel}[kernel]
    return impl.list_matchings(len(g.vertices), eu, ev)


def matching_weight(g, matching, point=None):
    """Product of edge weights; exact rational when a point is supplied."""
    if point is None:
        total = LaurentPoly.one(g.nvars())
        for e in matching:
            w = g.edges[e][2]
            total = total * w if isinstance(w, LaurentPoly) else total.scale(w)
        return total
    total = Fraction(1)
    for e in matching:
        w = g.edges[e][2]
        total *= w.eval(point) if isinstance(w, LaurentPoly) else Fraction(w)
    return total


def matching_gf(g, point=None, kernel=None):
    """Sum of matching weights: a LaurentPoly, or a Fraction at a point.

    The empty graph has generating function 1; a graph without perfect
    matchings has generating function 0.
    """
    matchings = enumerate_matchings(g, kernel)
    if point is None:
        total = LaurentPoly.zero(g.nvars())
        for m in matchings:
            total = total + matching_weight(g, m)
        return total
    total = Fraction(0)
    evaluated = {}
    for e, rec in g.edges.items():
        w = rec[2]
        evaluated[e] = w.eval(point) if isinstance(w, LaurentPoly) else Fraction(w)
    for m in matchings:
        prod = Fraction(1)
        for e in m:
            prod *= evaluated[e]
        total += prod
    return total


def complete_matching(g, required):
    """The unique perfect matching containing the given edges, by forcing.

    Takes the required edges, then repeatedly matches degree-1 vertices.
    Raises if a dead end or a genuine choice remains.
    """
    adj = g.adjacency()
    v_alive = {v: True for v in g.vertices}
    e_alive = {e: True for e in g.edges}
    deg = {v: len(adj[v]) for v in g.vertices}
    chosen = []

    def take(e):
        u, v = g.edges[e][0], g.edges[e][1]
        if not (v_alive[u] and v_alive[v] and e_alive[e]):
            raise ValueError("required edges are not a partial matching")
        chosen.append(e)
        for w in (u, v):
            v_alive[w] = False
        for w in (u, v):
            for f in adj[w]:
                if e_alive[f]:
                    e_alive[f] = False
                    deg[g.edges[f][0]] -= 1
                    deg[g.edges[f][1]] -= 1

    for e in sorted(required):
        take(e)
    while True:
        progress = False
        for v in sorted(g.vertices):
            if not v_alive[v]:
                continue
            if deg[v] == 0:
                raise ValueError("no completion: vertex %d stranded" % v)
            if deg[v] == 1:
                take(next(f for f in adj[v] if e_alive[f]))
                progress = True
        if not progress:
            break
    if any(v_alive.values()):
        raise ValueError("completion is not forced (free choice remains)")
    return tuple(sorted(chosen))
