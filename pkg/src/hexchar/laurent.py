"""Multivariate Laurent polynomials with half-integer exponents.

Representation: a dict mapping exponent vectors to nonzero Fraction
coefficients.  Exponent vectors are tuples of doubled ints, one per variable,
so x0^(1/2) is the vector (1,), x0^-1 is (-2,).  Two polynomials are equal
iff their term dicts are equal; zero coefficients are never stored.

This is the universal value type for edge weights, pattern weights and
character generating functions.
"""

from __future__ import annotations

from fractions import Fraction

from .halfint import format_fraction, format_half, fraction_sqrt, parse_fraction


class LaurentError(ValueError):
    pass


class LaurentPoly:
    __slots__ = ("nvars", "terms")

    def __init__(self, nvars, terms=None):
        self.nvars = int(nvars)
        self.terms = {}
        if terms:
            for exp, coeff in terms.items():
                coeff = Fraction(coeff)
                if coeff == 0:
                    continue
                exp = tuple(int(e) for e in exp)
                if len(exp) != self.nvars:
                    raise LaurentError("exponent arity mismatch")
                self.terms[exp] = self.terms.get(exp, Fraction(0)) + coeff
            self.terms = {e: c for e, c in self.terms.items() if c != 0}

    # ---------- constructors ----------

    @staticmethod
    def zero(nvars):
        return LaurentPoly(nvars)

    @staticmethod
    def const(nvars, value):
        value = Fraction(value)
        if value == 0:
            return LaurentPoly(nvars)
        return LaurentPoly(nvars, {(0,) * nvars: value})

    @staticmethod
    def one(nvars):
        return LaurentPoly.const(nvars, 1)

    @staticmethod
    def monomial(nvars, exp_twice, coeff=1):
        """coeff * prod x_i^(exp_twice[i]/2)."""
        return LaurentPoly(nvars, {tuple(exp_twice): Fraction(coeff)})

    @staticmethod
    def var(nvars, i, power_twice=2):
        exp = [0] * nvars
        exp[i] = power_twice
        return LaurentPoly(nvars, {tuple(exp): Fraction(1)})

    # ---------- predicates ----------

    def is_zero(self):
        return not self.terms

    def is_monomial(self):
        return len(self.terms) == 1

    def as_fraction(self):
        """The constant value, when this polynomial is constant."""
        if not self.terms:
            return Fraction(0)
        ((exp, coeff),) = self.terms.items()
        if any(exp):
            raise LaurentError("not a constant polynomial")
        return coeff

    # ---------- arithmetic ----------

    def _check(self, other):
        if self.nvars != other.nvars:
            raise LaurentError("variable count mismatch: %d vs %d" % (self.nvars, other.nvars))

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = LaurentPoly.const(self.nvars, other)
        self._check(other)
        out = dict(self.terms)
        for exp, coeff in other.terms.items():
            s = out.get(exp, Fraction(0)) + coeff
            if s == 0:
                out.pop(exp, None)
            else:
                out[exp] = s
        res = LaurentPoly(self.nvars)
        res.terms = out
        return res

    __radd__ = __add__

    def __neg__(self):
        res = LaurentPoly(self.nvars)
        res.terms = {e: -c for e, c in self.terms.items()}
        return res

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            other = LaurentPoly.const(self.nvars, other)
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        self._check(other)
        out = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                s = out.get(e, Fraction(0)) + c1 * c2
                if s == 0:
                    out.pop(e, None)
                else:
                    out[e] = s
        res = LaurentPoly(self.nvars)
        res.terms = out
        return res

    __rmul__ = __mul__

    def scale(self, q):
        q = Fraction(q)
        res = LaurentPoly(self.nvars)
        if q != 0:
            res.terms = {e: c * q for e, c in self.terms.items()}
        return res

    def __pow__(self, k):
        if k < 0:
            raise LaurentError("negative power of a polynomial")
        res = LaurentPoly.one(self.nvars)
        base = self
        while k:
            if k & 1:
                res = res * base
            base = base * base
            k >>= 1
        return res

    def __eq__(self, other):
        return (
            isinstance(other, LaurentPoly)
            and self.nvars == other.nvars
            and self.terms == other.terms
        )

    def __hash__(self):
        return hash((self.nvars, frozenset(self.terms.items())))

    # ---------- substitutions ----------

    def flip_vars(self, indices):
        """Substitute x_i -> 1/x_i for each i in indices (exponent negation)."""
        idx = set(indices)
        out = {}
        for exp, coeff in self.terms.items():
            e = tuple(-v if i in idx else v for i, v in enumerate(exp))
            out[e] = out.get(e, Fraction(0)) + coeff
        res = LaurentPoly(self.nvars)
        res.terms = {e: c for e, c in out.items() if c != 0}
        return res

    def collapse_pairs(self):
        """Specialize 2n variables to (x_1, 1/x_1, ..., x_n, 1/x_n).

        Variable 2i is sent to x_i and variable 2i+1 to 1/x_i; exponents
        combine as e_(2i) - e_(2i+1).  Returns a polynomial in n variables.
        """
        if self.nvars % 2 != 0:
            raise LaurentError("pair collapse needs an even variable count")
        n = self.nvars // 2
        out = {}
        for exp, coeff in self.terms.items():
            e = tuple(exp[2 * i] - exp[2 * i + 1] for i in range(n))
            s = out.get(e, Fraction(0)) + coeff
            if s == 0:
                out.pop(e, None)
            else:
                out[e] = s
        res = LaurentPoly(n)
        res.terms = out
        return res

    def eval(self, point):
        """Exact evaluation at nonzero rationals.

        Where a variable occurs with a half-integer exponent its value must be
        a perfect square of a rational (the caller substitutes squares).
        """
        if len(point) != self.nvars:
            raise LaurentError("point arity mismatch")
        point = [Fraction(q) for q in point]
        if any(q == 0 for q in point):
            raise LaurentError("evaluation at zero")
        roots = [None] * self.nvars
        total = Fraction(0)
        for exp, coeff in self.terms.items():
            val = coeff
            for i, e in enumerate(exp):
                if e == 0:
                    continue
                if e % 2 == 0:
                    val *= point[i] ** (e // 2)
                else:
                    if roots[i] is None:
                        r = fraction_sqrt(point[i])
                        if r is None:
                            raise LaurentError(
                                "half exponent in variable %d needs a square value" % i
                            )
                        roots[i] = r
                    val *= roots[i] ** e
            total += val
        return total

    # ---------- canonical form / serialization ----------

    def sorted_terms(self):
        """Terms ordered lexicographically by exponent vector."""
        return sorted(self.terms.items())

    def to_json(self):
        return {
            "nvars": self.nvars,
            "terms": [
                {"coeff": format_fraction(c), "exp": list(e)} for e, c in self.sorted_terms()
            ],
        }

    @staticmethod
    def from_json(obj):
        return LaurentPoly(
            obj["nvars"],
            {tuple(t["exp"]): parse_fraction(t["coeff"]) for t in obj["terms"]},
        )

    def __repr__(self):
        if not self.terms:
            return "0"
        parts = []
        for exp, coeff in self.sorted_terms():
            factors = []
            for i, e in enumerate(exp):
                if e == 0:
                    continue
                if e == 2:
                    factors.append("x%d" % i)
                else:
                    factors.append("x%d^(%s)" % (i, format_half(e)))
            mono = "*".join(factors) if factors else "1"
            if coeff == 1 and factors:
                parts.append(mono)
            elif coeff == -1 and factors:
                parts.append("-" + mono)
            elif not factors:
                parts.append(format_fraction(coeff))
            else:
                parts.append("%s*%s" % (format_fraction(coeff), mono))
        out = parts[0]
        for p in parts[1:]:
            out += " - " + p[1:] if p.startswith("-") else " + " + p
        return out
