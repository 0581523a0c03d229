"""Gelfand-Tsetlin-type patterns: straight and trapezoidal, four families.

Families and their rows (entries stored as doubled ints, rows weakly
increasing left to right as displayed):

  gt               triangular, row R has R entries, classic interlacing
  symplectic       half pattern with 2n rows, non-negative integers
  even_orthogonal  half pattern with 2n-1 rows; first entries of odd rows
                   ("odd starters") may be negative; monotone in absolute value
  split_orthogonal half pattern with 2n rows, non-negative; odd starters are
                   independently integral or half-odd

A half pattern has rows of lengths 1,1,2,2,...; entries weakly increase along
both diagonal directions.  A trapezoidal (skew) pattern of inner size m keeps
the rows of the straight pattern from the inner bottom row downwards; rows
are keyed by their straight row number R so the straight case is m = 0.
"""

from __future__ import annotations

from .halfint import format_half, parse_half
from .laurent import LaurentPoly
from .partitions import Partition

PATTERN_FAMILIES = ("gt", "symplectic", "even_orthogonal", "split_orthogonal")

_GF_FAMILY = {
    "schur": "gt",
    "sp": "symplectic",
    "oe": "even_orthogonal",
    "so_odd": "split_orthogonal",
}


def row_length(family, R, *_):
    if family == "gt":
        return R
    return (R + 1) // 2


def bottom_row_number(family, n):
    if family == "gt":
        return n
    if family == "even_orthogonal":
        return 2 * n - 1
    return 2 * n


def top_row_number(family, m):
    """Straight row number of the retained inner boundary row (m >= 1)."""
    if family == "gt":
        return m
    if family == "even_orthogonal":
        return 2 * m - 1
    return 2 * m


class Pattern:
    """A straight (m = 0) or trapezoidal pattern of one of the four families."""

    __slots__ = ("family", "n", "m", "rows")

    def __init__(self, family, n, m, rows):
        if family not in PATTERN_FAMILIES:
            raise ValueError("unknown pattern family %r" % (family,))
        self.family = family
        self.n = int(n)
        self.m = int(m)
        self.rows = {int(R): tuple(int(v) for v in row) for R, row in rows.items()}

    def present_rows(self):
        return sorted(self.rows)

    def row(self, R):
        return self.rows.get(R, ())

    def first(self, R):
        row = self.rows.get(R, ())
        return row[0] if row else 0

    def row_sum(self, R):
        return sum(self.rows.get(R, ()))

    def abs_row_sum(self, R):
        return sum(abs(v) for v in self.rows.get(R, ()))

    def bottom(self):
        return self.rows[bottom_row_number(self.family, self.n)]

    def __eq__(self, other):
        return (
            isinstance(other, Pattern)
            and (self.family, self.n, self.m) == (other.family, other.n, other.m)
            and self.rows == other.rows
        )

    def __hash__(self):
        return hash((self.family, self.n, self.m, tuple(sorted(self.rows.items()))))

    def __repr__(self):
        body = " | ".join(
            ",".join(format_half(v) for v in self.rows[R]) for R in self.present_rows()
        )
        return "Pattern(%s n=%d m=%d: %s)" % (self.family, self.n, self.m, body)

    def to_json(self):
        return {
            "family": self.family,
            "n": self.n,
            "m": self.m,
            "rows": [[format_half(v) for v in self.rows[R]] for R in self.present_rows()],
        }

    @staticmethod
    def from_json(obj):
        family, n, m = obj["family"], obj["n"], obj["m"]
        lo = max(1, top_row_number(family, m)) if m else 1
        rows = {lo + i: tuple(parse_half(v) for v in row) for i, row in enumerate(obj["rows"])}
        return Pattern(family, n, m, rows)


def _is_starter_row(family, R):
    """Rows whose first entry is an odd starter (sign/parity exceptions)."""
    return family != "gt" and R % 2 == 1


def _adjacent_violations(family, R, upper, lower, out):
    """Check the diagonal inequalities between straight rows R and R+1."""
    absval = abs if family == "even_orthogonal" else (lambda v: v)
    if family == "gt":
        # rows increasing: lower[j] <= upper[j] <= lower[j+1]
        for j in range(len(upper)):
            if not lower[j] <= upper[j]:
                out.append("rows %d/%d pos %d: NE-diagonal decreases" % (R, R + 1, j + 1))
            if not upper[j] <= lower[j + 1]:
                out.append("rows %d/%d pos %d: SE-diagonal decreases" % (R, R + 1, j + 1))
        return
    if R % 2 == 1:
        # odd row above even row, equal lengths
        for j in range(len(upper)):
            if not absval(upper[j]) <= absval(lower[j]):
                out.append("rows %d/%d pos %d: SE-diagonal decreases" % (R, R + 1, j + 1))
        for j in range(len(upper) - 1):
            if not absval(lower[j]) <= absval(upper[j + 1]):
                out.append("rows %d/%d pos %d: NE-diagonal decreases" % (R, R + 1, j + 1))
    else:
        # even row above odd row, lower is longer by one
        for j in range(len(upper)):
            if not absval(lower[j]) <= absval(upper[j]):
                out.append("rows %d/%d pos %d: NE-diagonal decreases" % (R, R + 1, j + 1))
            if not absval(upper[j]) <= absval(lower[j + 1]):
                out.append("rows %d/%d pos %d: SE-diagonal decreases" % (R, R + 1, j + 1))


def validate_pattern(p):
    """All family invariants; returns a list of violations (empty = ok)."""
    out = []
    rows = p.present_rows()
    if not rows:
        return ["no rows"]
    lo, hi = rows[0], rows[-1]
    if hi != bottom_row_number(p.family, p.n):
        out.append("bottom row number %d does not match n=%d" % (hi, p.n))
    expect_lo = max(1, top_row_number(p.family, p.m)) if p.m else 1
    if lo != expect_lo or rows != list(range(lo, hi + 1)):
        out.append("row range %s does not match shape" % (rows,))
        return out
    for R in rows:
        if len(p.rows[R]) != row_length(p.family, R):
            out.append("row %d has length %d, expected %d" % (R, len(p.rows[R]), row_length(p.family, R)))
            return out

    entries = [(R, j, v) for R in rows for j, v in enumerate(p.rows[R])]
    if p.family == "gt":
        if any(v % 2 for _, _, v in entries):
            out.append("gt entries must be integers")
    elif p.family == "symplectic":
        for R, j, v in entries:
            if v % 2:
                out.append("row %d pos %d: not an integer" % (R, j + 1))
            if v < 0:
                out.append("row %d pos %d: negative entry" % (R, j + 1))
    elif p.family == "even_orthogonal":
        parities = {v % 2 for _, _, v in entries}
        if len(parities) > 1:
            out.append("entries must be all integers or all half-integers")
        for R, j, v in entries:
            if v < 0 and not (_is_starter_row(p.family, R) and j == 0):
                out.append("row %d pos %d: negative non-starter" % (R, j + 1))
    else:  # split_orthogonal
        parities = set()
        for R, j, v in entries:
            if v < 0:
                out.append("row %d pos %d: negative entry" % (R, j + 1))
            if not (_is_starter_row(p.family, R) and j == 0):
                parities.add(v % 2)
        if len(parities) > 1:
            out.append("non-starters must be all integers or all half-integers")

    for R in rows[:-1]:
        _adjacent_violations(p.family, R, p.rows[R], p.rows[R + 1], out)
    return out


def _sgn(v):
    return -1 if v < 0 else 1


def pattern_weight(p):
    """The weight monomial of a valid pattern, in n - m variables."""
    nv = p.n - p.m
    exp = [0] * nv
    if p.family == "gt":
        base = p.m
        prev = p.row_sum(base)
        for i in range(1, nv + 1):
            cur = p.row_sum(base + i)
            exp[i - 1] = cur - prev
            prev = cur
    elif p.family in ("symplectic", "split_orthogonal"):
        base = 2 * p.m
        for i in range(1, nv + 1):
            exp[i - 1] = (
                p.row_sum(base + 2 * i)
                - 2 * p.row_sum(base + 2 * i - 1)
                + p.row_sum(base + 2 * i - 2)
            )
    else:  # even_orthogonal
        base = 2 * p.m
        for i in range(1, nv + 1):
            sign = _sgn(p.first(base + 2 * i - 1)) * _sgn(p.first(base + 2 * i - 3))
            mag = (
                p.abs_row_sum(base + 2 * i - 1)
                - 2 * p.abs_row_sum(base + 2 * i - 2)
                + p.abs_row_sum(base + 2 * i - 3)
            )
            exp[i - 1] = sign * mag
    return LaurentPoly.monomial(nv, tuple(exp))


# ---------------------------------------------------------------------------
# Enumeration
# ---------------------------------------------------------------------------


def _range_step2(lo, hi, parity):
    """Doubled values v with lo <= v <= hi and v % 2 == parity, ascending."""
    start = lo if lo % 2 == parity % 2 else lo + 1
    return range(start, hi + 1, 2)


def _candidate_rows(family, R, lower, grid, nonneg):
    """All rows that may sit at straight row R directly above `lower`.

    `grid` is the entry parity (0 integer, 1 half-odd) of the non-starters;
    candidates are produced in lexicographic order.
    """
    length = row_length(family, R)
    if family == "gt":
        ranges = [_range_step2(lower[j], lower[j + 1], 0) for j in range(length)]
    else:
        absval = abs if family == "even_orthogonal" else (lambda v: v)
        low = [absval(v) for v in lower]
        ranges = []
        for j in range(length):
            if R % 2 == 1:
                lo = low[j - 1] if j >= 1 else None
                hi = low[j]
            else:
                lo, hi = low[j], low[j + 1]
            if _is_starter_row(family, R) and j == 0:
                if family == "even_orthogonal" and not nonneg:
                    ranges.append(_range_step2(-hi, hi, grid))
                elif family == "split_orthogonal":
                    # either grid, non-negative
                    ranges.append(range(max(0 if lo is None else lo, 0), hi + 1))
                else:
                    ranges.append(_range_step2(max(0 if lo is None else lo, 0), hi, grid))
            else:
                lo = 0 if lo is None else max(lo, 0)
                ranges.append(_range_step2(lo, hi, grid))

    def rec(j, prefix):
        if j == length:
            yield tuple(prefix)
            return
        for v in ranges[j]:
            prefix.append(v)
            yield from rec(j + 1, prefix)
            prefix.pop()

    yield from rec(0, [])


def _row_fits_above(family, upper, lower, R):
    out = []
    _adjacent_violations(family, R, upper, lower, out)
    return not out


def iter_patterns(family, n, m, bottom, top=None, *, bottom_variants=False, nonneg=False):
    """Depth-first stream of all valid patterns, deterministic order.

    `bottom` (length n) and `top` (length m, skew only) are weakly increasing
    doubled tuples.  For even_orthogonal, `bottom_variants` unions the bottom
    row with its starter-negated variant; `nonneg` restricts to patterns with
    every entry non-negative.
    """
    bottom = tuple(int(v) for v in bottom)
    if len(bottom) != n:
        raise ValueError("bottom row must have %d entries" % n)
    if m:
        top = tuple(int(v) for v in top)
        if len(top) != m:
            raise ValueError("top row must have %d entries" % m)
        if top and bottom and top[0] % 2 != bottom[0] % 2 and family != "split_orthogonal":
            raise ValueError("top and bottom rows live on different parity grids")
    elif top is not None and len(top) > 0:
        raise ValueError("a top row needs m >= 1")

    bottoms = [bottom]
    if bottom_variants and family == "even_orthogonal" and bottom and bottom[0] != 0:
        bottoms.append((-bottom[0],) + bottom[1:])

    hi = bottom_row_number(family, n)
    lo = max(1, top_row_number(family, m)) if m else 1
    grid = 0
    sample = [v for v in bottom[1:]] or [bottom[0] if bottom else 0]
    if family in ("even_orthogonal",):
        grid = (bottom[0] if bottom else 0) % 2
    elif family == "split_orthogonal":
        grid = sample[0] % 2 if sample else 0

    top_R = top_row_number(family, m) if m else None

    for bot in bottoms:
        if nonneg and any(v < 0 for v in bot):
            continue
        if m and top_R == hi:
            if bot == top:
                yield Pattern(family, n, m, {hi: bot})
            continue

        stack = {hi: bot}

        def rec(R):
            lower = stack[R + 1]
            if m and R == top_R:
                if _row_fits_above(family, top, lower, R):
                    yield Pattern(family, n, m, dict(stack) | {R: top})
                return
            for cand in _candidate_rows(family, R, lower, grid, nonneg):
                stack[R] = cand
                if R == lo:
                    yield Pattern(family, n, m, dict(stack))
                else:
                    yield from rec(R - 1)
                del stack[R]

        if lo == hi:
            yield Pattern(family, n, m, dict(stack))
        else:
            yield from rec(hi - 1)


def character_gf(gf_family, lam, mu=None, n=None):
    """Generating function of the pattern model of a character.

    gf_family in {schur, sp, oe, so_odd}; lam (and mu for skew shapes) are
    Partitions; the result lives in len(lam) - len(mu) variables.  Empty
    enumerations give the zero polynomial.
    """
    family = _GF_FAMILY[gf_family]
    if n is not None:
        lam = lam.padded(n)
    n = len(lam)
    m = len(mu) if mu is not None else 0
    if m and mu.kind != lam.kind and family != "split_orthogonal":
        raise ValueError("inner and outer shapes live on different parity grids")
    nv = n - m
    total = LaurentPoly.zero(nv)
    top = mu.increasing() if m else None
    variants = family == "even_orthogonal"
    for p in iter_patterns(family, n, m, lam.increasing(), top, bottom_variants=variants):
        total = total + pattern_weight(p)
    return total


def count_patterns(gf_family, lam, mu=None):
    family = _GF_FAMILY[gf_family]
    n, m = len(lam), len(mu) if mu is not None else 0
    top = mu.increasing() if m else None
    return sum(
        1
        for _ in iter_patterns(
            family, n, m, lam.increasing(), top, bottom_variants=family == "even_orthogonal"
        )
    )


# ---------------------------------------------------------------------------
# The row-flip involution on even orthogonal patterns
# ---------------------------------------------------------------------------


def j_involution(p, i):
    """Replace row 2i-2 by its complement within its diagonal bounds.

    Defined for straight even orthogonal patterns and 2 <= i <= n.  The upper
    reference row is padded with an implicit greatest element on the right.
    Negates the x_i exponent whenever one of the adjacent odd starters is 0.
    """
    if p.family != "even_orthogonal" or p.m != 0:
        raise ValueError("the involution acts on straight even orthogonal patterns")
    if not 2 <= i <= p.n:
        raise ValueError("row parameter out of range")
    up = p.rows[2 * i - 3]
    low = p.rows[2 * i - 1]
    mid = p.rows[2 * i - 2]
    new = []
    for j in range(len(mid)):
        hi_pair = low[j + 1] if j + 1 >= len(up) else min(up[j + 1], low[j + 1])
        new.append(max(abs(up[j]), abs(low[j])) + hi_pair - mid[j])
    rows = dict(p.rows)
    rows[2 * i - 2] = tuple(new)
    return Pattern(p.family, p.n, p.m, rows)


# ---------------------------------------------------------------------------
# Split orthogonal <-> symplectic round-up
# ---------------------------------------------------------------------------


def split_to_symplectic_roundup(p):
    """Round every half-odd odd starter up by 1/2; returns (pattern, count)."""
    if p.family != "split_orthogonal":
        raise ValueError("round-up acts on split orthogonal patterns")
    rows = {}
    count = 0
    for R, row in p.rows.items():
        if _is_starter_row(p.family, R) and row and row[0] % 2 == 1:
            rows[R] = (row[0] + 1,) + row[1:]
            count += 1
        else:
            rows[R] = row
    q = Pattern("symplectic", p.n, p.m, rows)
    return q, count


def split_preimages(p):
    """All split orthogonal patterns whose round-up is the symplectic p."""
    if p.family != "symplectic":
        raise ValueError("expected a symplectic pattern")
    odd_rows = [R for R in p.present_rows() if _is_starter_row("symplectic", R) and p.rows[R]]
    results = [dict(p.rows)]
    for R in odd_rows:
        s = p.rows[R][0]
        nxt = []
        for rows in results:
            nxt.append(rows)
            if s > 0:
                alt = dict(rows)
                alt[R] = (s - 1,) + alt[R][1:]
                nxt.append(alt)
        results = nxt
    return [Pattern("split_orthogonal", p.n, p.m, rows) for rows in results]


__all__ = [
    "PATTERN_FAMILIES",
    "Pattern",
    "Partition",
    "validate_pattern",
    "pattern_weight",
    "iter_patterns",
    "character_gf",
    "count_patterns",
    "j_involution",
    "split_to_symplectic_roundup",
    "split_preimages",
    "bottom_row_number",
    "top_row_number",
    "row_length",
]
