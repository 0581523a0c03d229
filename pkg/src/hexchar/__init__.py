"""Exact characters of the classical groups, three ways.

Straight and skew characters of GL, Sp, O(even) and SO(odd) computed as
determinant ratios, as generating functions of Gelfand-Tsetlin-type
patterns, and as matching generating functions of weighted honeycomb
graphs, with the weight-preserving bijections between the models and the
graph transformations (reflective factorization, weight symmetrization,
local doubling) that turn the mirrored Schur specializations

    s_hat(x_1, 1/x_1, ..., x_n, 1/x_n)

into products of symplectic and orthogonal characters.  All arithmetic is
exact: rationals, and Laurent polynomials on the half-integer exponent grid.
"""

from .halfint import HalfInt, TOP
from .laurent import LaurentPoly
from .partitions import Partition
from .patterns import Pattern, character_gf
from .tableaux import SkewTableau

__all__ = [
    "HalfInt",
    "TOP",
    "LaurentPoly",
    "Partition",
    "Pattern",
    "SkewTableau",
    "character_gf",
]

__version__ = "0.1.0"
