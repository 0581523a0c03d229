"""Bijections between perfect matchings and patterns.

A matching of any of the graph families is determined by the positions of
its vertical edges.  Reading those positions row by row (with the family's
labelling of vertical slots) gives a strictly-increasing-diagonal array; a
per-diagonal shift turns it into a pattern of the matching family:

  schur_T          gt patterns        shift: subtract the diagonal index
  symplectic_htm   symplectic         shift: subtract the SE-diagonal index
  orthogonal_htp   even orthogonal    shift: per-row affine offset
  odd_hhtm         split orthogonal   hhtm matchings carry round-up choices

All maps are weight-preserving and inverted by `pattern_to_matching`.
"""

from __future__ import annotations

from .matchings import complete_matching
from .patterns import Pattern

MODELS = ("schur_T", "symplectic_htm", "orthogonal_htp", "odd_hhtm")


def _vertical_rows(g):
    """Matched-vertical bookkeeping helpers: eid -> (graph row, x units)."""
    info = {}
    for eid, (u, v, _w, kind, tag) in g.edges.items():
        if kind != "vert":
            continue
        (xu, yu), (xv, yv) = g.vertices[u], g.vertices[v]
        y = min(yu, yv)
        if tag.startswith("topattach"):
            info[eid] = (0, xu // 2, int(tag.split(":")[1]))
        elif tag.startswith("attach"):
            info[eid] = (g.meta["rows"], xu // 2, int(tag.split(":")[1]))
        else:
            info[eid] = (y, xu // 2, None)
    return info


def _label_T(g, row, x, pos):
    if pos is not None:
        return pos
    return (x + row - 1) // 2 + 1


def _label_htm(g, row, x, pos):
    if pos is not None:
        return pos
    n = g.meta["n"] // 2
    t = (row + 1) // 2
    return (n + 1 - t) + (x // 2 if row % 2 else (x - 1) // 2)


def _label_htp(g, row, x, pos):
    if pos is not None:
        return pos
    n = g.meta["n"] // 2
    t = row // 2
    return (n - t - x // 2) if row % 2 else (n - t + (1 - x) // 2)


_LABELS = {
    "T": _label_T,
    "ST": _label_T,
    "HTminus": _label_htm,
    "HHTminus": _label_htm,
    "HTplus": _label_htp,
    "HHTplus": _label_htp,
}


def _anchor_x(g, row, label):
    """Inverse of the label maps: x units of the labelled vertical slot."""
    b = g.meta["builder"]
    n = g.meta["n"] // 2 if b not in ("T", "ST") else None
    if b in ("T", "ST"):
        if row == g.meta["rows"]:
            return 2 * label - g.meta["rows"] - 1
        return 2 * (label - 1) - row + 1
    if b in ("HTminus", "HHTminus"):
        if row == g.meta["rows"]:
            return 2 * label - 1
        t = (row + 1) // 2
        d = label - (n + 1 - t)
        return 2 * d if row % 2 else 2 * d + 1
    if b in ("HTplus", "HHTplus"):
        if row == g.meta["rows"]:
            return 1 - 2 * label
        t = row // 2
        return -2 * (label - n + t) if row % 2 else 1 - 2 * (label - n + t)
    raise ValueError(b)


def matching_positions(g, matching):
    """Row -> increasing list of vertical-slot labels of the matching."""
    info = _vertical_rows(g)
    rows = {}
    label = _LABELS[g.meta["builder"]]
    for eid in matching:
        if eid in info:
            row, x, pos = info[eid]
            rows.setdefault(row, []).append(label(g, row, x, pos))
    return {r: sorted(v) for r, v in rows.items()}


def matching_to_pattern(g, matching):
    """The pattern of the matching under the graph family's bijection."""
    b = g.meta["builder"]
    pos = matching_positions(g, matching)
    if b in ("T", "ST"):
        h = g.meta["rows"]
        m = len(g.meta["q"] or ())
        n = h + m
        rows = {}
        for i in range(0 if m else 1, h + 1):
            lab = pos.get(i, []) if i else sorted(g.meta["q"])
            rows[m + i] = tuple(2 * (t - j) for j, t in enumerate(lab, start=1))
        return Pattern("gt", n, m, rows)
    if b in ("HTminus", "HHTminus"):
        n2 = g.meta["rows"]
        n = n2 // 2
        rows = {}
        for i in range(1, n2 + 1):
            lab = pos.get(i, [])
            entries = []
            for j, t in enumerate(lab, start=1):
                d = (2 * n + 2 * j - i - 1) // 2 if i % 2 else n + j - i // 2
                entries.append(2 * (t - d))
            rows[i] = tuple(entries)
        return Pattern("symplectic", n, 0, rows)
    if b in ("HTplus", "HHTplus"):
        n2 = g.meta["rows"]
        n = n2 // 2
        if pos.get(1):
            raise ValueError("top-row vertical in a plus-family matching")
        rows = {}
        for i in range(2, n2 + 1):
            lab = pos.get(i, [])
            rows[i - 1] = tuple(2 * (t - (n - i // 2 + j - 1)) for j, t in enumerate(lab, start=1))
        return Pattern("even_orthogonal", n, 0, rows)
    raise ValueError(b)


def pattern_to_matching(g, p):
    """The unique matching with the pattern's vertical positions."""
    b = g.meta["builder"]
    required = []
    edge_at = {}
    for eid, (u, v, _w, kind, _tag) in g.edges.items():
        if kind == "vert":
            (xu, yu), (xv, yv) = g.vertices[u], g.vertices[v]
            edge_at[(xu // 2, min(yu, yv))] = eid

    def need(row, x):
        required.append(edge_at[(x, row)])

    if b in ("T", "ST"):
        h, m = g.meta["rows"], len(g.meta["q"] or ())
        for i in range(1, h + 1):
            row = p.rows[m + i]
            for j, val in enumerate(row, start=1):
                need(i, _anchor_x(g, i, val // 2 + j))
    elif b in ("HTminus", "HHTminus"):
        n2 = g.meta["rows"]
        n = n2 // 2
        for i in range(1, n2 + 1):
            for j, val in enumerate(p.rows[i], start=1):
                d = (2 * n + 2 * j - i - 1) // 2 if i % 2 else n + j - i // 2
                need(i, _anchor_x(g, i, val // 2 + d))
    elif b in ("HTplus", "HHTplus"):
        n2 = g.meta["rows"]
        n = n2 // 2
        for i in range(2, n2 + 1):
            for j, val in enumerate(p.rows[i - 1], start=1):
                need(i, _anchor_x(g, i, val // 2 + n - i // 2 + j - 1))
    else:
        raise ValueError(b)
    return complete_matching(g, required)


def matching_pattern_bijection(model, direction, g, obj):
    """Public dispatch per matching model; see the module docstring."""
    if model not in MODELS:
        raise ValueError("unknown model %r" % (model,))
    if direction == "to_pattern":
        p = matching_to_pattern(g, obj)
        if model == "odd_hhtm":
            return p  # the non-negative symplectic image; round-down choices
            # are enumerated by patterns.split_preimages
        return p
    if direction == "to_matching":
        if model == "odd_hhtm" and obj.family == "split_orthogonal":
            from .patterns import split_to_symplectic_roundup

            obj, _count = split_to_symplectic_roundup(obj)
        return pattern_to_matching(g, obj)
    raise ValueError(direction)
