"""One-parameter deformation b^H(T) = exp(beta * Psi(T)).

beta may be a rational number (coefficients stay in the free algebra) or the
formal symbol "beta", in which case coefficients live in BetaNCF, the free
algebra with an adjoined central polynomial variable. beta = 0 gives the
constant series 1; beta = 1 gives exp(Psi(T)), the grouplike series whose
logarithm collects the noncommutative power sums.
"""

from __future__ import annotations

from fractions import Fraction

from ..errors import InputError
from ..exactcore import TruncSeries
from ..ncsf import NCF, psi_series


class BetaNCF:
    """Free-algebra element with polynomial beta coefficients.

    terms: (beta_exponent, word) -> Fraction. beta is central; words multiply
    by concatenation exactly as in NCF.
    """

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        clean = {}
        for key, c in (terms or {}).items():
            c = Fraction(c)
            if c:
                clean[key] = c
        self.terms = clean

    @classmethod
    def zero(cls) -> "BetaNCF":
        return cls()

    @classmethod
    def one(cls) -> "BetaNCF":
        return cls({(0, ()): Fraction(1)})

    @classmethod
    def from_ncf(cls, x: NCF, beta_exp: int = 0) -> "BetaNCF":
        return cls({(beta_exp, w): c for w, c in x.terms.items()})

    def coeff(self, beta_exp: int, word: tuple) -> Fraction:
        return self.terms.get((beta_exp, tuple(word)), Fraction(0))

    def eval_beta(self, value) -> NCF:
        """Substitute a rational value for beta."""
        value = Fraction(value)
        out: dict = {}
        for (k, w), c in self.terms.items():
            c = c * value**k
            if c:
                out[w] = out.get(w, Fraction(0)) + c
        return NCF({w: c for w, c in out.items() if c})

    def __add__(self, other):
        if not isinstance(other, BetaNCF):
            return NotImplemented
        out = dict(self.terms)
        for key, c in other.terms.items():
            out[key] = out.get(key, Fraction(0)) + c
        return BetaNCF(out)

    def __neg__(self):
        return BetaNCF({key: -c for key, c in self.terms.items()})

    def __sub__(self, other):
        if not isinstance(other, BetaNCF):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return BetaNCF({key: c * other for key, c in self.terms.items()})
        if not isinstance(other, BetaNCF):
            return NotImplemented
        out: dict = {}
        for (k1, w1), c1 in self.terms.items():
            for (k2, w2), c2 in other.terms.items():
                key = (k1 + k2, w1 + w2)
                out[key] = out.get(key, Fraction(0)) + c1 * c2
        return BetaNCF(out)

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self * other
        return NotImplemented

    def __eq__(self, other):
        return isinstance(other, BetaNCF) and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __repr__(self):
        if not self.terms:
            return "BetaNCF(0)"
        bits = []
        for (k, w), c in sorted(self.terms.items()):
            beta = "" if k == 0 else ("b" if k == 1 else f"b^{k}")
            word = "1" if not w else "Z[" + ",".join(map(str, w)) + "]"
            bits.append(f"{c}*{beta}{word}" if beta else f"{c}*{word}")
        return "BetaNCF(" + " + ".join(bits) + ")"


class BetaNCFRing:
    """Ring tag so TruncSeries can take BetaNCF coefficients."""

    name = "BetaNCF"

    @staticmethod
    def one():
        return BetaNCF.one()

    @staticmethod
    def zero():
        return BetaNCF.zero()


def beta_deform(beta, order: int) -> TruncSeries:
    """exp(beta * Psi(T)) to T^order.

    beta: a rational (int/Fraction) for a numeric specialization, or the
    string "beta" for the formal parameter. Returns a grouplike-normalized
    series (constant term 1) over NCF or BetaNCF accordingly.
    """
    if order < 1 or order > 8:
        raise InputError("order must be between 1 and 8")
    psi = psi_series(order)
    if isinstance(beta, str):
        if beta != "beta":
            raise InputError(f"formal parameter must be named 'beta', got {beta!r}")
        lifted = psi.map_coeffs(lambda c: BetaNCF.from_ncf(c, beta_exp=1), ring=BetaNCFRing)
        return lifted.exp()
    scaled = psi.scale(Fraction(beta))
    return scaled.exp()
