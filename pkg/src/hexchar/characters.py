"""Determinantal evaluation of classical group characters at rational points.

The four families are evaluated exactly from their Weyl-type determinant
ratios.  Half-integer exponents (the odd orthogonal family always; the even
orthogonal family on half-integer shapes) are handled by substituting
x_i = s_i^2, so every matrix entry is an honest rational.  These evaluations
are the independent oracle for the pattern and matching models.
"""

from __future__ import annotations

import random
from fractions import Fraction

from .exactdet import det_exact
from .partitions import Partition

FAMILIES = ("schur", "sp", "oe", "so_odd")


class DegeneratePointError(ZeroDivisionError):
    """The Weyl denominator vanished; the caller retries with a fresh point."""


def _ratio(num, den):
    d = det_exact(den)
    if d == 0:
        raise DegeneratePointError("degenerate point")
    return det_exact(num) / d


def char_eval_det(family, lam, n, point):
    """Exact character value at a rational point.

    `lam` is padded with zeros to n parts.  `point` entries are nonzero and
    pairwise distinct.  For so_odd (always) and oe on half-integer shapes the
    entries are understood as s_i with x_i = s_i^2 substituted internally.
    """
    lam = lam.padded(n)
    point = [Fraction(q) for q in point]
    if len(point) != n:
        raise ValueError("point must have %d entries" % n)
    if any(q == 0 for q in point):
        raise ValueError("point entries must be nonzero")

    if family == "schur":
        if lam.kind != "integer":
            raise ValueError("schur needs an integer shape")
        exps = [lam.twice[j] // 2 + n - 1 - j for j in range(n)]
        num = [[x**e for e in exps] for x in point]
        den = [[x ** (n - 1 - j) for j in range(n)] for x in point]
        return _ratio(num, den)

    if family == "sp":
        if lam.kind != "integer":
            raise ValueError("sp needs an integer shape")
        exps = [lam.twice[j] // 2 + n - j for j in range(n)]
        num = [[x**e - x**-e for e in exps] for x in point]
        den = [[x ** (n - j) - x ** -(n - j) for j in range(n)] for x in point]
        return _ratio(num, den)

    if family == "oe":
        # Exponents lam_j + n - 1 - j, doubled; x = s^2 when any is half-odd.
        exps2 = [lam.twice[j] + 2 * (n - 1 - j) for j in range(n)]
        if lam.kind == "half":
            xs = point  # entries are the s_i
            num = [[s**e + s**-e for e in exps2] for s in xs]
            den = [[s ** (2 * (n - 1 - j)) + s ** (-2 * (n - 1 - j)) for j in range(n)] for s in xs]
        else:
            num = [[x ** (e // 2) + x ** -(e // 2) for e in exps2] for x in point]
            den = [[x ** (n - 1 - j) + x ** -(n - 1 - j) for j in range(n)] for x in point]
        doubling = 2 if (n > 0 and lam.twice[-1] != 0) else 1
        return doubling * _ratio(num, den)

    if family == "so_odd":
        if lam.kind != "integer":
            raise ValueError("so_odd needs an integer shape (half grid not used here)")
        # Exponents lam_j + n - j + 1/2; with x = s^2 the entry is s^(2e) - s^(-2e).
        exps2 = [lam.twice[j] + 2 * (n - j) - 1 for j in range(n)]
        num = [[s**e - s**-e for e in exps2] for s in point]
        den = [[s ** (2 * (n - j) - 1) - s ** (-(2 * (n - j) - 1)) for j in range(n)] for s in point]
        return _ratio(num, den)

    raise ValueError("unknown family %r" % (family,))


def random_point(n, rng_or_seed, max_den=50):
    """n pairwise distinct positive rationals p/q with 1 <= p,q <= max_den."""
    rng = rng_or_seed if isinstance(rng_or_seed, random.Random) else random.Random(rng_or_seed)
    point = []
    seen = set()
    while len(point) < n:
        q = Fraction(rng.randint(1, max_den), rng.randint(1, max_den))
        if q in seen or q == 1:
            continue
        seen.add(q)
        point.append(q)
    return point


def eval_at_squares(poly, svals):
    """Evaluate a Laurent polynomial at x_i = s_i^2 (exact half exponents)."""
    return poly.eval([Fraction(s) ** 2 for s in svals])


__all__ = [
    "FAMILIES",
    "DegeneratePointError",
    "char_eval_det",
    "random_point",
    "eval_at_squares",
    "Partition",
]
