"""Exact determinants of rational matrices.

`det_exact` eliminates over the rational field with a Bareiss-style
fraction-free pass used as an optimization whenever the matrix is integral;
correctness never depends on the pivoting strategy.  `det_cofactor` is the
independent oracle used by the tests on small matrices.
"""

from __future__ import annotations

from fractions import Fraction


def det_cofactor(m):
    """Determinant by cofactor expansion (oracle; exponential, n <= 6 or so)."""
    n = len(m)
    if n == 0:
        return Fraction(1)
    if n == 1:
        return Fraction(m[0][0])
    total = Fraction(0)
    sign = 1
    for j in range(n):
        minor = [row[:j] + row[j + 1 :] for row in m[1:]]
        total += sign * Fraction(m[0][j]) * det_cofactor(minor)
        sign = -sign
    return total


def _det_bareiss_int(m):
    """Fraction-free elimination for an integer matrix."""
    n = len(m)
    m = [list(row) for row in m]
    prev = 1
    sign = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for i in range(k + 1, n):
                if m[i][k] != 0:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
            m[i][k] = 0
        prev = m[k][k]
    return sign * m[n - 1][n - 1]


def det_exact(m):
    """Exact determinant of a square matrix of Fractions (or ints)."""
    n = len(m)
    if n == 0:
        return Fraction(1)
    if any(len(row) != n for row in m):
        raise ValueError("matrix is not square")
    rows = [[Fraction(x) for x in row] for row in m]
    if all(x.denominator == 1 for row in rows for x in row):
        return Fraction(_det_bareiss_int([[x.numerator for x in row] for row in rows]))

    det = Fraction(1)
    for k in range(n):
        pivot = None
        for i in range(k, n):
            if rows[i][k] != 0:
                pivot = i
                break
        if pivot is None:
            return Fraction(0)
        if pivot != k:
            rows[k], rows[pivot] = rows[pivot], rows[k]
            det = -det
        det *= rows[k][k]
        inv = 1 / rows[k][k]
        for i in range(k + 1, n):
            if rows[i][k] == 0:
                continue
            factor = rows[i][k] * inv
            for j in range(k, n):
                rows[i][j] -= factor * rows[k][j]
    return det
