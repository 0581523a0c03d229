"""Partitions on the half-integer grid.

Parts are stored as doubled ints, weakly decreasing, zero parts allowed.
A partition is integer-type (all parts integral) or half-integer-type (all
parts half-odd); mixing grids is rejected.
"""

from __future__ import annotations

from .halfint import format_half, parse_half


class Partition:
    """Weakly decreasing parts >= 0 on a single parity grid."""

    __slots__ = ("twice",)

    def __init__(self, parts_twice):
        t = tuple(int(p) for p in parts_twice)
        if any(a < b for a, b in zip(t, t[1:])):
            raise ValueError("parts must be weakly decreasing")
        if any(p < 0 for p in t):
            raise ValueError("parts must be non-negative")
        if t:
            par = t[0] % 2
            if any(p % 2 != par for p in t):
                raise ValueError("parts must all be integers or all half-odd")
        self.twice = t

    @staticmethod
    def parse(s):
        """Parse "2,1,0" or "3/2,1/2"; empty string is the empty partition."""
        s = str(s).strip()
        if not s:
            return Partition(())
        return Partition(tuple(parse_half(tok) for tok in s.split(",")))

    @staticmethod
    def from_ints(parts):
        return Partition(tuple(2 * p for p in parts))

    @property
    def kind(self):
        if not self.twice or self.twice[0] % 2 == 0:
            return "integer"
        return "half"

    def __len__(self):
        return len(self.twice)

    def __iter__(self):
        return iter(self.twice)

    def __getitem__(self, i):
        return self.twice[i]

    def __eq__(self, other):
        return isinstance(other, Partition) and self.twice == other.twice

    def __hash__(self):
        return hash(self.twice)

    def padded(self, n):
        """Pad with zero parts to length n."""
        if len(self.twice) > n:
            if any(p != 0 for p in self.twice[n:]):
                raise ValueError("more than %d nonzero parts" % n)
            return Partition(self.twice[:n])
        return Partition(self.twice + (0,) * (n - len(self.twice)))

    def shifted(self, delta_twice):
        """Add the half-integer delta (doubled) to every part."""
        return Partition(tuple(p + delta_twice for p in self.twice))

    def increasing(self):
        """Parts as a weakly increasing doubled tuple (the bottom-row order)."""
        return tuple(reversed(self.twice))

    def contains(self, inner):
        """Cell-wise containment, padding the inner shape with zeros."""
        inner_p = tuple(inner.twice) + (0,) * max(0, len(self.twice) - len(inner.twice))
        if len(inner.twice) > len(self.twice) and any(
            p != 0 for p in inner.twice[len(self.twice) :]
        ):
            return False
        return all(i <= o for i, o in zip(inner_p, self.twice))

    def strings(self):
        return [format_half(p) for p in self.twice]

    def __repr__(self):
        return "Partition(%s)" % (",".join(self.strings()) or "-",)


def hat_shape(lam, part):
    """The symmetric 2n-part shape driving the factorization identities.

    part 1: (lam_1+1, ..., lam_n+1, -lam_n, ..., -lam_1) + lam_1
    part 2: (lam_1,   ..., lam_n,   -lam_n, ..., -lam_1) + lam_1
    Input must be an integer partition padded to its n.
    """
    if lam.kind != "integer":
        raise ValueError("hat shapes need an integer partition")
    n = len(lam)
    lam1 = lam.twice[0] if n else 0
    bump = 2 if part == 1 else 0
    front = [p + bump for p in lam.twice]
    back = [-p for p in reversed(lam.twice)]
    return Partition(tuple(p + lam1 for p in front + back))


def hat_inner_shape(mu, lam1_twice, part):
    """The matching inner shape: the same construction shifted by the outer lam_1."""
    if mu.kind != "integer":
        raise ValueError("hat shapes need an integer partition")
    bump = 2 if part == 1 else 0
    front = [p + bump for p in mu.twice]
    back = [-p for p in reversed(mu.twice)]
    return Partition(tuple(p + lam1_twice for p in front + back))
