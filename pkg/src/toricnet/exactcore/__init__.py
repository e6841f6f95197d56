"""Exact arithmetic kernel: rationals, integer/rational linear algebra,
sparse polynomials, and truncated power series over pluggable rings.

The rational scalar type is ``fractions.Fraction`` (re-exported as
``Rational``): arbitrary precision, always normalized with positive
denominator, hashable and usable as dict keys.
"""

from fractions import Fraction as Rational

from .matrices import (
    ff_determinant,
    hermite_normal_form,
    identity,
    inverse_rational,
    lattice_kernel,
    mat_mul,
    mat_vec,
    rank,
    rational_rref,
    right_kernel_rational,
    smith_normal_form,
    solve_rational,
    transpose,
)
from .polynomials import SparsePoly
from .series import PolyRing, QRing, TruncSeries

__all__ = [
    "Rational",
    "SparsePoly",
    "TruncSeries",
    "QRing",
    "PolyRing",
    "ff_determinant",
    "hermite_normal_form",
    "lattice_kernel",
    "smith_normal_form",
    "rational_rref",
    "right_kernel_rational",
    "solve_rational",
    "rank",
    "mat_mul",
    "mat_vec",
    "transpose",
    "identity",
    "inverse_rational",
]
