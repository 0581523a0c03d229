"""End-to-end verification of the factorization identities.

The two straight identities, for an integer partition lam with n parts and
hat(lam) built by mirroring (part 1 bumps the first block by one):

  part 1:  s_hat(x_1, 1/x_1, ..., x_n, 1/x_n) = sp_lam * oe_(lam+1)
  part 2:  s_hat(...) * prod (x_i^(1/2) + x_i^(-1/2))
                       = so_odd_lam * oe_(lam+1/2)

and their skew refinements with inner shapes mu, hat(mu) (shifted by the
outer lam_1).  Everything is verified as an exact equality of Laurent
polynomials; part 2 is checked in the cleared form above so all arithmetic
stays inside the Laurent ring.  When the mirrored inner shape is not
contained in the outer one both sides must be the zero polynomial.
"""

from __future__ import annotations

import json
import random
import time
from fractions import Fraction

from .characters import DegeneratePointError, char_eval_det, random_point
from .halfint import format_fraction
from .laurent import LaurentPoly
from .partitions import Partition, hat_inner_shape, hat_shape
from .patterns import character_gf, count_patterns
from .tableaux import tableau_gf


class Report:
    """Outcome of one identity check."""

    __slots__ = ("identity", "params", "lhs", "rhs", "equal", "counters", "elapsed", "seed")

    def __init__(self, identity, params, lhs, rhs, counters=None, elapsed=0.0, seed=None):
        self.identity = identity
        self.params = params
        self.lhs = lhs
        self.rhs = rhs
        self.equal = lhs == rhs
        self.counters = dict(counters or {})
        self.elapsed = elapsed
        self.seed = seed

    def _render(self, side):
        if isinstance(side, LaurentPoly):
            return side.to_json()
        if isinstance(side, Fraction):
            return format_fraction(side)
        return side

    def to_json(self):
        return {
            "identity": self.identity,
            "params": self.params,
            "lhs": self._render(self.lhs),
            "rhs": self._render(self.rhs),
            "equal": self.equal,
            "counters": self.counters,
            "elapsed": round(self.elapsed, 6),
            "seed": self.seed,
        }

    def summary(self):
        return "%s %s  (%s)  [%.3fs]" % (
            "PASS" if self.equal else "FAIL",
            self.identity,
            ", ".join("%s=%s" % kv for kv in self.params.items()),
            self.elapsed,
        )


def _half_sum_factor(nvars):
    """prod_i (x_i^(1/2) + x_i^(-1/2)) as a Laurent polynomial."""
    out = LaurentPoly.one(nvars)
    for i in range(nvars):
        out = out * LaurentPoly(nvars, {
            tuple(1 if j == i else 0 for j in range(nvars)): 1,
            tuple(-1 if j == i else 0 for j in range(nvars)): 1,
        })
    return out


def verify_thm1(part, lam, n=None):
    """Exact check of one straight factorization; returns a Report."""
    t0 = time.time()
    if lam.kind != "integer":
        raise ValueError("the factorization identities take integer shapes")
    lam = lam.padded(n) if n else lam
    n = len(lam)
    lamhat = hat_shape(lam, part)
    counters = {}
    schur = character_gf("schur", lamhat)
    counters["hat_patterns"] = count_patterns("schur", lamhat)
    lhs = schur.collapse_pairs()
    if part == 1:
        rhs = character_gf("sp", lam) * character_gf("oe", lam.shifted(2))
    else:
        lhs = lhs * _half_sum_factor(n)
        rhs = character_gf("so_odd", lam) * character_gf("oe", lam.shifted(1))
    return Report(
        "thm1-part%d" % part,
        {"lambda": ",".join(lam.strings()) or "0", "n": n},
        lhs,
        rhs,
        counters,
        time.time() - t0,
    )


def verify_skew(part, lam, mu, n=None, m=None):
    """Exact check of one skew factorization; returns a Report."""
    t0 = time.time()
    lam = lam.padded(n) if n else lam
    mu = mu.padded(m) if m is not None else mu
    n, m = len(lam), len(mu)
    if not m < n:
        raise ValueError("the inner shape needs fewer parts than the outer")
    nv = n - m
    counters = {}
    lamhat = hat_shape(lam, part)
    try:
        muhat = hat_inner_shape(mu, lam.twice[0], part)
    except ValueError:
        muhat = None  # mirrored inner shape is not even a partition: zero side
    if muhat is None:
        lhs = LaurentPoly.zero(nv)
    else:
        lhs = character_gf("schur", lamhat, muhat).collapse_pairs()
    counters["hat_patterns"] = count_patterns("schur", lamhat, muhat) if muhat else 0
    if part == 1:
        rhs = character_gf("sp", lam, mu) * character_gf("oe", lam.shifted(2), mu.shifted(2))
    else:
        lhs = lhs * _half_sum_factor(nv)
        rhs = character_gf("so_odd", lam, mu) * character_gf(
            "oe", lam.shifted(1), mu.shifted(1)
        )
    return Report(
        "skew-part%d" % part,
        {
            "lambda": ",".join(lam.strings()) or "0",
            "mu": ",".join(mu.strings()) or "0",
            "n": n,
            "m": m,
        },
        lhs,
        rhs,
        counters,
        time.time() - t0,
    )


_TABLEAU_OF = {
    "schur": "ordinary",
    "sp": "symplectic",
    "oe": "even_orthogonal",
    "so_odd": "odd_orthogonal",
}


def cross_check(family, lam, mu=None, npoints=5, seed=17):
    """Pattern model vs tableau model vs determinant; returns a Report.

    The pattern and tableau generating functions are compared symbolically;
    for straight shapes the pattern GF is also evaluated against the
    determinant at npoints random rational points (resampling on degenerate
    ones).  Skew shapes have no determinant here, so only the symbolic leg
    runs for them.
    """
    t0 = time.time()
    rng = random.Random(seed)
    n = len(lam)
    m = len(mu) if mu is not None else 0
    nv = n - m
    gf = character_gf(family, lam, mu)
    counters = {"patterns": count_patterns(family, lam, mu), "resampled": 0, "points": 0}
    ok = True
    if lam.kind == "integer" and (mu is None or mu.kind == "integer"):
        tgf = tableau_gf(_TABLEAU_OF[family], lam, mu if mu is not None else Partition(()), nv)
        if family == "schur" and mu is None:
            pass  # straight ordinary tableaux use n letters on the same shape
        ok = ok and (tgf == gf)
        counters["tableau_terms"] = len(tgf.terms)
    if mu is None:
        done = 0
        while done < npoints:
            pt = random_point(n, rng)
            try:
                det = char_eval_det(family, lam, n, pt)
            except DegeneratePointError:
                counters["resampled"] += 1
                continue
            if family == "so_odd" or (family == "oe" and lam.kind == "half"):
                val = gf.eval([q * q for q in pt])
            else:
                val = gf.eval(pt)
            ok = ok and (val == det)
            done += 1
            counters["points"] += 1
    return Report(
        "crosscheck-%s" % family,
        {
            "lambda": ",".join(lam.strings()) or "0",
            **({"mu": ",".join(mu.strings()) or "0"} if mu is not None else {}),
        },
        "all-models-agree",
        "all-models-agree" if ok else "mismatch",
        counters,
        time.time() - t0,
        seed,
    )


def _partitions_up_to(n, maxpart):
    """Weakly decreasing integer tuples of length n with entries <= maxpart."""
    out = []

    def rec(prefix, hi):
        if len(prefix) == n:
            out.append(tuple(prefix))
            return
        for v in range(hi, -1, -1):
            rec(prefix + [v], v)

    rec([], maxpart)
    return out


def selftest(grid="small", emit=print):
    """The identity sweep; returns the list of Reports (all must pass)."""
    reports = []
    nmax, lmax = (2, 1) if grid == "small" else (3, 2)
    for n in range(1, nmax + 1):
        for lam_t in _partitions_up_to(n, lmax):
            lam = Partition.from_ints(lam_t)
            for part in (1, 2):
                reports.append(verify_thm1(part, lam))
                emit(reports[-1].summary())
    for n in range(1, nmax + 1):
        for m in range(0, n):
            for lam_t in _partitions_up_to(n, lmax):
                lam = Partition.from_ints(lam_t)
                for mu_t in _partitions_up_to(m, lmax):
                    mu = Partition.from_ints(mu_t)
                    if not lam.contains(mu):
                        continue
                    for part in (1, 2):
                        reports.append(verify_skew(part, lam, mu))
                        emit(reports[-1].summary())
    for family in ("schur", "sp", "oe", "so_odd"):
        for n in range(1, nmax + 1):
            for lam_t in _partitions_up_to(n, lmax):
                if family != "schur" and max(lam_t, default=0) == 0 and False:
                    continue
                reports.append(cross_check(family, Partition.from_ints(lam_t)))
                emit(reports[-1].summary())
    return reports


def report_json(report):
    return json.dumps(report.to_json(), indent=2)
