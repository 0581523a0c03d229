"""Skew semistandard tableaux for the four character families.

Alphabets (level i runs 1..N where N is the variable count):

  ordinary          1 < 2 < ... < N
  symplectic        1bar < 1 < 2bar < 2 < ...
  even_orthogonal   1hat < 1check < 1bar < 1 < 2hat < ...
  odd_orthogonal    1hat < 1bar < 1 < 2hat < ...

A symbol is a pair (level, tag).  Cells are stored row-major for the cells of
the skew diagram only; inner cells are implicit.  The weight of a tableau is
prod x_i^(#i - #ibar); hatted and checked symbols are weight-neutral.

The bijections map tableaux to the trapezoidal patterns of `patterns` by
reading off the chain of shapes "cells with symbol <= s", one pattern row per
alphabet symbol level step.
"""

from __future__ import annotations

from .laurent import LaurentPoly
from .partitions import Partition
from .patterns import Pattern, row_length, top_row_number, validate_pattern

TABLEAU_FAMILIES = ("ordinary", "symplectic", "even_orthogonal", "odd_orthogonal")

_TAGS = {
    "ordinary": ("plain",),
    "symplectic": ("bar", "plain"),
    "even_orthogonal": ("hat", "check", "bar", "plain"),
    "odd_orthogonal": ("hat", "bar", "plain"),
}

_TAG_SUFFIX = {"plain": "", "bar": "bar", "hat": "hat", "check": "check"}


def symbol_rank(family, sym):
    level, tag = sym
    tags = _TAGS[family]
    return (level - 1) * len(tags) + tags.index(tag)


def symbols(family, nletters):
    out = []
    for level in range(1, nletters + 1):
        for tag in _TAGS[family]:
            out.append((level, tag))
    return out


def format_symbol(sym):
    level, tag = sym
    return "%d%s" % (level, _TAG_SUFFIX[tag])


def parse_symbol(s):
    s = str(s).strip()
    if s == "empty":
        return None
    for tag, suffix in _TAG_SUFFIX.items():
        if suffix and s.endswith(suffix):
            return (int(s[: -len(suffix)]), tag)
    return (int(s), "plain")


class SkewTableau:
    """Filling of a skew diagram outer/inner by family symbols."""

    __slots__ = ("family", "outer", "inner", "nletters", "cells")

    def __init__(self, family, outer, inner, nletters, cells):
        if family not in TABLEAU_FAMILIES:
            raise ValueError("unknown tableau family %r" % (family,))
        self.family = family
        self.outer = outer
        self.inner = inner.padded(len(outer)) if len(inner) < len(outer) else inner
        self.nletters = int(nletters)
        self.cells = [list(row) for row in cells]

    @property
    def m(self):
        """Parts of the inner shape (the outer is padded, so derive it)."""
        return len(self.outer) - self.nletters

    def shape_row(self, r):
        """(inner_len, outer_len) of 1-based row r, in cells."""
        return self.inner.twice[r - 1] // 2, self.outer.twice[r - 1] // 2

    def entry(self, r, c):
        """Symbol at 1-based (row, col), or None outside the skew shape."""
        if not 1 <= r <= len(self.outer):
            return None
        lo, hi = self.shape_row(r)
        if not lo < c <= hi:
            return None
        return self.cells[r - 1][c - lo - 1]

    def iter_cells(self):
        for r in range(1, len(self.outer) + 1):
            lo, _hi = self.shape_row(r)
            for k, sym in enumerate(self.cells[r - 1]):
                yield r, lo + k + 1, sym

    def __eq__(self, other):
        return (
            isinstance(other, SkewTableau)
            and (self.family, self.nletters) == (other.family, other.nletters)
            and self.outer == other.outer
            and self.inner == other.inner
            and self.cells == other.cells
        )

    def __hash__(self):
        return hash(
            (self.family, self.nletters, self.outer, self.inner, tuple(map(tuple, self.cells)))
        )

    def __repr__(self):
        rows = []
        for r in range(1, len(self.outer) + 1):
            lo, _ = self.shape_row(r)
            rows.append("." * lo + " ".join(format_symbol(s) for s in self.cells[r - 1]))
        return "SkewTableau(%s: %s)" % (self.family, " / ".join(rows))

    def to_json(self):
        out_rows = []
        for r in range(1, len(self.outer) + 1):
            lo, _ = self.shape_row(r)
            out_rows.append(["empty"] * lo + [format_symbol(s) for s in self.cells[r - 1]])
        return {
            "family": self.family,
            "outer": self.outer.strings(),
            "inner": self.inner.strings(),
            "nletters": self.nletters,
            "rows": out_rows,
        }

    @staticmethod
    def from_json(obj):
        outer = Partition.parse(",".join(obj["outer"]))
        inner = Partition.parse(",".join(obj["inner"])) if obj["inner"] else Partition(())
        cells = []
        for row in obj["rows"]:
            cells.append([parse_symbol(s) for s in row if s != "empty"])
        return SkewTableau(obj["family"], outer, inner, obj["nletters"], cells)


def validate_tableau(t):
    """All family conditions; returns a list of violations (empty = ok)."""
    out = []
    fam = t.family
    m = t.m
    if t.outer.kind != "integer" or (len(t.inner) and t.inner.kind != "integer"):
        return ["tableau shapes must be integer partitions"]
    if not t.outer.contains(t.inner):
        return ["inner shape not contained in outer shape"]
    for r in range(1, len(t.outer) + 1):
        lo, hi = t.shape_row(r)
        if len(t.cells[r - 1]) != hi - lo:
            return ["row %d has %d cells, expected %d" % (r, len(t.cells[r - 1]), hi - lo)]

    for r, c, sym in t.iter_cells():
        level, tag = sym
        if tag not in _TAGS[fam]:
            out.append("(%d,%d): symbol %s outside the alphabet" % (r, c, format_symbol(sym)))
            continue
        if not 1 <= level <= t.nletters:
            out.append("(%d,%d): level %d out of range" % (r, c, level))
        left = t.entry(r, c - 1)
        if left is not None and symbol_rank(fam, sym) < symbol_rank(fam, left):
            out.append("(%d,%d): row decreases" % (r, c))
        above = t.entry(r - 1, c)
        if above is not None and symbol_rank(fam, sym) <= symbol_rank(fam, above):
            out.append("(%d,%d): column not strictly increasing" % (r, c))
        # row thresholds
        if r > m:
            i = r - m
            if fam == "symplectic" and symbol_rank(fam, sym) < symbol_rank(fam, (i, "bar")):
                out.append("(%d,%d): below the row threshold %dbar" % (r, c, i))
            if fam == "even_orthogonal" and symbol_rank(fam, sym) < symbol_rank(fam, (i, "check")):
                out.append("(%d,%d): below the row threshold %dcheck" % (r, c, i))
            if fam == "odd_orthogonal" and symbol_rank(fam, sym) < symbol_rank(fam, (i, "hat")):
                out.append("(%d,%d): below the row threshold %dhat" % (r, c, i))
        # first-column-only symbols
        if fam == "even_orthogonal" and tag == "hat" and (c != 1 or r != level + m - 1):
            out.append("(%d,%d): %s only allowed in column 1 of row %d" % (r, c, format_symbol(sym), level + m - 1))
        if fam == "even_orthogonal" and tag == "check" and (c != 1 or r != level + m):
            out.append("(%d,%d): %s only allowed in column 1 of row %d" % (r, c, format_symbol(sym), level + m))
        if fam == "odd_orthogonal" and tag == "hat" and (c != 1 or r != level + m):
            out.append("(%d,%d): %s only allowed in column 1 of row %d" % (r, c, format_symbol(sym), level + m))

    if fam == "even_orthogonal":
        for i in range(1, t.nletters + 1):
            has_hat = t.entry(i + m - 1, 1) == (i, "hat")
            has_check = t.entry(i + m, 1) == (i, "check")
            if has_hat != has_check:
                out.append("%dhat/%dcheck must appear together" % (i, i))
            # bar-i in column 1 of row i+m forces bar-i immediately above each i there
            if t.entry(i + m, 1) == (i, "bar"):
                r = i + m
                lo, hi = (t.shape_row(r) if r <= len(t.outer) else (0, 0))
                for c in range(lo + 1, hi + 1):
                    if t.entry(r, c) == (i, "plain") and t.entry(r - 1, c) != (i, "bar"):
                        out.append("(%d,%d): %d needs %dbar immediately above" % (r, c, i, i))
    return out


def tableau_weight(t):
    """prod x_i^(#plain i - #bar i) as a Laurent monomial."""
    exp = [0] * t.nletters
    for _r, _c, (level, tag) in t.iter_cells():
        if tag == "plain":
            exp[level - 1] += 2
        elif tag == "bar":
            exp[level - 1] -= 2
    return LaurentPoly.monomial(t.nletters, tuple(exp))


def iter_tableaux(family, outer, inner, nletters):
    """All valid fillings, in lexicographic cell order."""
    inner = inner.padded(len(outer))
    if not outer.contains(inner):
        return
    coords = []
    for r in range(1, len(outer) + 1):
        lo, hi = inner.twice[r - 1] // 2, outer.twice[r - 1] // 2
        for c in range(lo + 1, hi + 1):
            coords.append((r, c))
    syms = symbols(family, nletters)
    t = SkewTableau(
        family,
        outer,
        inner,
        nletters,
        [
            [None] * (outer.twice[r - 1] // 2 - inner.twice[r - 1] // 2)
            for r in range(1, len(outer) + 1)
        ],
    )

    def cell_ok(r, c, sym):
        level, tag = sym
        left = t.entry(r, c - 1)
        if left is not None and symbol_rank(family, sym) < symbol_rank(family, left):
            return False
        above = t.entry(r - 1, c)
        if above is not None and symbol_rank(family, sym) <= symbol_rank(family, above):
            return False
        m = len(outer) - nletters
        if r > m:
            i = r - m
            floor_tag = {"symplectic": "bar", "even_orthogonal": "check", "odd_orthogonal": "hat"}.get(family)
            if floor_tag and symbol_rank(family, sym) < symbol_rank(family, (i, floor_tag)):
                return False
        if family == "even_orthogonal" and tag == "hat" and (c != 1 or r != level + m - 1):
            return False
        if family == "even_orthogonal" and tag == "check" and (c != 1 or r != level + m):
            return False
        if family == "odd_orthogonal" and tag == "hat" and (c != 1 or r != level + m):
            return False
        return True

    def rec(k):
        if k == len(coords):
            if not validate_tableau(t):
                yield SkewTableau(family, outer, inner, nletters, t.cells)
            return
        r, c = coords[k]
        lo, _ = t.shape_row(r)
        for sym in syms:
            if not cell_ok(r, c, sym):
                continue
            t.cells[r - 1][c - lo - 1] = sym
            yield from rec(k + 1)
            t.cells[r - 1][c - lo - 1] = None

    yield from rec(0)


def tableau_gf(family, outer, inner, nletters):
    total = LaurentPoly.zero(nletters)
    for t in iter_tableaux(family, outer, inner, nletters):
        total = total + tableau_weight(t)
    return total


# ---------------------------------------------------------------------------
# Shape-chain plumbing shared by the bijections
# ---------------------------------------------------------------------------


def _row_to_partition(row, rounded=False):
    """Pattern row (increasing doubled ints) -> decreasing integer partition."""
    vals = [abs(v) for v in row]
    if rounded:
        vals = [v + 1 if v % 2 else v for v in vals]
    if any(v % 2 for v in vals):
        raise ValueError("row does not round to an integer partition")
    return tuple(sorted((v // 2 for v in vals), reverse=True))


def _strip_cells(smaller, larger):
    """Cells of larger minus smaller; must be a horizontal strip."""
    small = tuple(smaller) + (0,) * (len(larger) - len(smaller))
    cells = []
    for r, (a, b) in enumerate(zip(small, larger), start=1):
        if a > b:
            raise ValueError("shapes not nested")
        cells.extend((r, c) for c in range(a + 1, b + 1))
    for r, c in cells:
        if (r + 1, c) in cells:
            raise ValueError("not a horizontal strip")
    return cells


def _partition_from_cells(mu, cells_by_level, nrows):
    """Outer shape after adding all cells to mu (for inverse maps)."""
    rows = list(mu) + [0] * (nrows - len(mu))
    for r, c in cells_by_level:
        rows[r - 1] = max(rows[r - 1], c)
    return tuple(rows)


def _pad_increasing(partition, length):
    part = tuple(partition) + (0,) * (length - len(partition))
    if len(part) > length and any(p for p in part[length:]):
        raise ValueError("shape has too many parts for its pattern row")
    return tuple(sorted(2 * p for p in part[:length]))


# ---------------------------------------------------------------------------
# ordinary and symplectic bijections (shape chains, no signs)
# ---------------------------------------------------------------------------


def _chain_to_pattern(family, chain, n, m):
    """Shape chain (index 0 = inner shape) -> pattern rows."""
    base = top_row_number(family, m) if m else 0
    rows = {}
    lo = max(1, base) if m else 1
    hi = base + len(chain) - 1
    for idx, shape in enumerate(chain):
        R = base + idx
        if R < lo:
            continue
        rows[R] = _pad_increasing(shape, row_length(family, R))
    return Pattern(family, n, m, rows), lo, hi


def tableau_to_pattern(t):
    """Weight-preserving map onto the matching trapezoidal pattern family."""
    fam = t.family
    m = t.m
    nv = t.nletters
    mu = tuple(v // 2 for v in t.inner.twice[:m])
    if fam == "ordinary":
        n = m + nv
        chain = [mu]
        cells = {level: [] for level in range(1, nv + 1)}
        for r, c, (level, _tag) in t.iter_cells():
            cells[level].append((r, c))
        shape = mu
        for level in range(1, nv + 1):
            shape = _partition_from_cells(shape, cells[level], len(t.outer))
            chain.append(shape)
        pat, _, _ = _chain_to_pattern("gt", chain, n, m)
        return pat

    if fam == "symplectic":
        n = m + nv
        steps = []  # symbols in alphabet order: 1bar, 1, 2bar, 2, ...
        for level in range(1, nv + 1):
            steps.append((level, "bar"))
            steps.append((level, "plain"))
        cells = {sym: [] for sym in steps}
        for r, c, sym in t.iter_cells():
            cells[sym].append((r, c))
        chain = [mu]
        shape = mu
        for sym in steps:
            shape = _partition_from_cells(shape, cells[sym], len(t.outer))
            chain.append(shape)
        pat, _, _ = _chain_to_pattern("symplectic", chain, n, m)
        return pat

    if fam == "even_orthogonal":
        return _eo_tableau_to_pattern(t)
    if fam == "odd_orthogonal":
        return _oo_tableau_to_pattern(t)
    raise ValueError(fam)


def pattern_to_tableau(p, outer=None, inner=None):
    """Inverse of tableau_to_pattern on valid patterns."""
    fam = p.family
    if fam == "gt":
        return _chain_pattern_to_tableau(p, "ordinary", [("plain",)])
    if fam == "symplectic":
        return _chain_pattern_to_tableau(p, "symplectic", [("bar",), ("plain",)])
    if fam == "even_orthogonal":
        return _eo_pattern_to_tableau(p)
    if fam == "split_orthogonal":
        return _oo_pattern_to_tableau(p)
    raise ValueError(fam)


def _chain_pattern_to_tableau(p, family, tags_per_step):
    m = p.m
    nv = p.n - p.m
    base = top_row_number(p.family, m) if m else 0
    steps_per_level = len(tags_per_step)
    mu_shape = _row_to_partition(p.rows[base]) if m else ()
    fills = {}
    prev = mu_shape
    for step in range(1, steps_per_level * nv + 1):
        R = base + step
        cur = _row_to_partition(p.rows[R]) if R in p.rows else prev
        level = (step + steps_per_level - 1) // steps_per_level
        tag = tags_per_step[(step - 1) % steps_per_level][0]
        for r, c in _strip_cells(prev, cur):
            fills[(r, c)] = (level, tag)
        prev = cur
    lam = prev
    nrows = m + nv
    outer_p = Partition(tuple(2 * x for x in (tuple(lam) + (0,) * nrows)[:nrows]))
    inner_p = Partition(tuple(2 * x for x in (tuple(mu_shape) + (0,) * nrows)[:nrows]))
    cells = []
    for r in range(1, nrows + 1):
        lo, hi_c = inner_p.twice[r - 1] // 2, outer_p.twice[r - 1] // 2
        cells.append([fills[(r, c)] for c in range(lo + 1, hi_c + 1)])
    return SkewTableau(family, outer_p, inner_p, nv, cells)


# ---------------------------------------------------------------------------
# even orthogonal bijection (sign products, hat/check pairs)
# ---------------------------------------------------------------------------


def _sgn(v):
    return -1 if v < 0 else 1


def _eo_tableau_cells(p):
    """Forward fillings for an even orthogonal pattern; returns dict cell->sym."""
    m, nv = p.m, p.n - p.m
    base = 2 * p.m
    fills = {}
    prev = _row_to_partition(p.rows[base - 1]) if m else ()
    nrows_hint = 0
    for i in range(1, nv + 1):
        Rm, Rt = base + 2 * i - 2, base + 2 * i - 1
        mid = _row_to_partition(p.rows[Rm]) if Rm >= 1 else prev
        top = _row_to_partition(p.rows[Rt])
        s = _sgn(p.first(base + 2 * i - 1)) * _sgn(p.first(base + 2 * i - 3))
        strip_a = _strip_cells(prev, mid)
        strip_b = _strip_cells(mid, top)
        if s > 0:
            for cell in strip_a:
                fills[cell] = (i, "bar")
            for cell in strip_b:
                fills[cell] = (i, "plain")
        else:
            for cell in strip_a:
                fills[cell] = (i, "plain")
            for cell in strip_b:
                fills[cell] = (i, "bar")
            # columns where the bar sits directly below the plain entry
            bset = set(strip_b)
            for r, c in strip_a:
                if (r + 1, c) in bset:
                    if c == 1:
                        fills[(r, c)] = (i, "hat")
                        fills[(r + 1, c)] = (i, "check")
                    else:
                        fills[(r, c)] = (i, "bar")
                        fills[(r + 1, c)] = (i, "plain")
        prev = top
        nrows_hint = max(nrows_hint, len([x for x in top if x]))
    return fills, prev


def _eo_tableau_to_pattern(t):
    m, nv = t.m, t.nletters
    n = m + nv
    base = 2 * m
    mu = tuple(v // 2 for v in t.inner.twice[:m])
    rows = {}
    if m:
        rows[base - 1] = _pad_increasing(mu, row_length("even_orthogonal", base - 1))
    cells = {i: [] for i in range(1, nv + 1)}
    for r, c, (level, tag) in t.iter_cells():
        cells[level].append((r, c, tag))
    prev = mu
    prev_sign = 1
    for i in range(1, nv + 1):
        level_cells = cells[i]
        split = _eo_split_level(level_cells, prev, t, i, m, prev_sign)
        strip_a, strip_b, s = split
        mid = _partition_from_cells(prev, strip_a, len(t.outer))
        top = _partition_from_cells(mid, strip_b, len(t.outer))
        Rm, Rt = base + 2 * i - 2, base + 2 * i - 1
        mid_row = _pad_increasing(mid, row_length("even_orthogonal", Rm))
        top_row = list(_pad_increasing(top, row_length("even_orthogonal", Rt)))
        sign = s * prev_sign
        if top_row[0] != 0 and sign < 0:
            top_row[0] = -top_row[0]
        if Rm >= 1:
            rows[Rm] = mid_row
        rows[Rt] = tuple(top_row)
        prev = top
        prev_sign = _sgn(rows[Rt][0])
    return Pattern("even_orthogonal", n, m, rows)


def _eo_split_level(level_cells, prev_shape, t, i, m, prev_sign):
    """Split the level-i cells into the two strips and recover the sign product.

    A zero odd starter forces the sign product to equal the sign of the
    previous starter, which disambiguates splits that fit both ways.
    """
    plain = {(r, c) for r, c, tag in level_cells if tag == "plain"}
    bar = {(r, c) for r, c, tag in level_cells if tag == "bar"}
    hat = {(r, c) for r, c, tag in level_cells if tag == "hat"}
    check = {(r, c) for r, c, tag in level_cells if tag == "check"}
    candidates = []
    for s in (1, -1):
        if s > 0:
            if hat or check:
                continue
            strip_a, strip_b = set(bar), set(plain)
        else:
            strip_a, strip_b = set(), set()
            for r, c in hat:
                strip_a.add((r, c))
            for r, c in check:
                strip_b.add((r, c))
            stacked_upper = {(r, c) for (r, c) in bar if (r + 1, c) in plain}
            if any(c == 1 for (_r, c) in stacked_upper):
                continue  # a column-1 stack would have been hatted
            for r, c in bar:
                (strip_a if (r, c) in stacked_upper else strip_b).add((r, c))
            for r, c in plain:
                (strip_b if (r - 1, c) in stacked_upper else strip_a).add((r, c))
        try:
            mid = _partition_from_cells(prev_shape, sorted(strip_a), len(t.outer))
            if sorted(_strip_cells(prev_shape, mid)) != sorted(strip_a):
                continue
            top = _partition_from_cells(mid, sorted(strip_b), len(t.outer))
            if sorted(_strip_cells(mid, top)) != sorted(strip_b):
                continue
            if len([x for x in mid if x]) > row_length("even_orthogonal", 2 * m + 2 * i - 2):
                continue
            if len([x for x in top if x]) > row_length("even_orthogonal", 2 * m + 2 * i - 1):
                continue
        except ValueError:
            continue
        if len([x for x in top if x]) < row_length("even_orthogonal", 2 * m + 2 * i - 1):
            if s != prev_sign:
                continue  # zero starter: the sign product is pinned
        candidates.append((sorted(strip_a), sorted(strip_b), s))
    if not candidates:
        raise ValueError("cells of level %d do not split into strips" % i)
    if len(candidates) == 2 and candidates[0][:2] != candidates[1][:2]:
        raise ValueError("ambiguous strip split with nonzero starter")
    return candidates[0]


def _eo_pattern_to_tableau(p):
    m, nv = p.m, p.n - p.m
    fills, lam = _eo_tableau_cells(p)
    mu = tuple(v // 2 for v in (p.rows[2 * m - 1] if m else ()))
    mu = tuple(sorted((abs(v) for v in mu), reverse=True))
    nrows = m + nv
    outer = Partition(tuple(2 * x for x in (tuple(lam) + (0,) * nrows)[:nrows]))
    inner = Partition(tuple(2 * x for x in (mu + (0,) * nrows)[:nrows]))
    cells = []
    for r in range(1, nrows + 1):
        lo, hi = inner.twice[r - 1] // 2, outer.twice[r - 1] // 2
        cells.append([fills[(r, c)] for c in range(lo + 1, hi + 1)])
    return SkewTableau("even_orthogonal", outer, inner, nv, cells)


# ---------------------------------------------------------------------------
# odd orthogonal bijection (split patterns; hats mark half-odd starters)
# ---------------------------------------------------------------------------


def _oo_pattern_to_tableau(p):
    m, nv = p.m, p.n - p.m
    base = 2 * m
    mu = _row_to_partition(p.rows[base]) if m else ()
    fills = {}
    prev = mu
    for i in range(1, nv + 1):
        Ro, Re = base + 2 * i - 1, base + 2 * i
        half_start = bool(p.rows[Ro]) and p.rows[Ro][0] % 2 == 1
        mid = _row_to_partition(p.rows[Ro], rounded=True)
        top = _row_to_partition(p.rows[Re])
        for cell in _strip_cells(prev, mid):
            fills[cell] = (i, "bar")
        if half_start:
            fills[(m + i, 1)] = (i, "hat")
        for cell in _strip_cells(mid, top):
            fills[cell] = (i, "plain")
        prev = top
    nrows = m + nv
    outer = Partition(tuple(2 * x for x in (tuple(prev) + (0,) * nrows)[:nrows]))
    inner = Partition(tuple(2 * x for x in (tuple(mu) + (0,) * nrows)[:nrows]))
    cells = []
    for r in range(1, nrows + 1):
        lo, hi = inner.twice[r - 1] // 2, outer.twice[r - 1] // 2
        cells.append([fills[(r, c)] for c in range(lo + 1, hi + 1)])
    return SkewTableau("odd_orthogonal", outer, inner, nv, cells)


def _oo_tableau_to_pattern(t):
    m, nv = t.m, t.nletters
    n = m + nv
    base = 2 * m
    mu = tuple(v // 2 for v in t.inner.twice[:m])
    rows = {}
    if m:
        rows[base] = _pad_increasing(mu, row_length("split_orthogonal", base))
    cells = {i: {"bar": [], "plain": [], "hat": []} for i in range(1, nv + 1)}
    for r, c, (level, tag) in t.iter_cells():
        cells[level][tag].append((r, c))
    prev = mu
    for i in range(1, nv + 1):
        bar_cells = cells[i]["bar"] + cells[i]["hat"]
        mid = _partition_from_cells(prev, bar_cells, len(t.outer))
        top = _partition_from_cells(mid, cells[i]["plain"], len(t.outer))
        Ro, Re = base + 2 * i - 1, base + 2 * i
        mid_row = list(_pad_increasing(mid, row_length("split_orthogonal", Ro)))
        if cells[i]["hat"]:
            mid_row[0] -= 1  # un-round the half-odd starter
        rows[Ro] = tuple(mid_row)
        rows[Re] = _pad_increasing(top, row_length("split_orthogonal", Re))
        prev = top
    return Pattern("split_orthogonal", n, m, rows)


def pattern_tableau_bijection(direction, obj):
    """Dispatch: direction "to_tableau" takes a Pattern, "to_pattern" a tableau."""
    if direction == "to_tableau":
        return pattern_to_tableau(obj)
    if direction == "to_pattern":
        return tableau_to_pattern(obj)
    raise ValueError(direction)


__all__ = [
    "TABLEAU_FAMILIES",
    "SkewTableau",
    "validate_tableau",
    "tableau_weight",
    "iter_tableaux",
    "tableau_gf",
    "tableau_to_pattern",
    "pattern_to_tableau",
    "pattern_tableau_bijection",
    "symbols",
    "symbol_rank",
    "format_symbol",
    "parse_symbol",
]
