"""Quasisymmetric functions in the monomial basis, dual to the free side.

QSF elements are finite Q-linear combinations of M_alpha for compositions
alpha; the product is the quasi-shuffle (overlapping shuffle). The pairing
with NCF words is <Z_alpha, M_beta> = delta_{alpha,beta}.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from itertools import combinations

from ..exactcore import SparsePoly
from .compositions import check_composition
from .nsym import NCF, TensorNCF


class QSF:
    """Quasisymmetric function, monomial basis: terms composition -> Q."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        clean = {}
        for a, c in (terms or {}).items():
            c = Fraction(c)
            if c:
                clean[check_composition(a)] = c
        object.__setattr__(self, "terms", clean)

    def __setattr__(self, name, value):
        raise AttributeError("QSF is immutable")

    @classmethod
    def zero(cls) -> "QSF":
        return cls({})

    @classmethod
    def one(cls) -> "QSF":
        return cls({(): Fraction(1)})

    @classmethod
    def monomial(cls, alpha, coeff=1) -> "QSF":
        return cls({tuple(alpha): Fraction(coeff)})

    def __add__(self, other):
        if not isinstance(other, QSF):
            return NotImplemented
        out = dict(self.terms)
        for a, c in other.terms.items():
            out[a] = out[a] + c if a in out else c
        return QSF(out)

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        return QSF({a: -c for a, c in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return QSF({a: c * other for a, c in self.terms.items()})
        if not isinstance(other, QSF):
            return NotImplemented
        return qsym_product(self, other)

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self * other
        return NotImplemented

    def __eq__(self, other):
        if isinstance(other, QSF):
            return self.terms == other.terms
        if other == 0:
            return not self.terms
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def coeff(self, alpha) -> Fraction:
        return self.terms.get(tuple(alpha), Fraction(0))

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda ac: (sum(ac[0]), len(ac[0]), ac[0]))

    def __repr__(self):
        if not self.terms:
            return "QSF(0)"
        bits = []
        for a, c in self.sorted_terms():
            name = "M" + str(list(a)).replace(" ", "") if a else "1"
            bits.append(f"{c}*{name}")
        return "QSF(" + " + ".join(bits) + ")"


@lru_cache(maxsize=None)
def _quasi_shuffle(a: tuple, b: tuple) -> tuple:
    """Multiset of compositions in M_a * M_b, as ((composition, mult), ...)."""
    if not a:
        return ((b, 1),)
    if not b:
        return ((a, 1),)
    out: dict = {}
    # first part from a, from b, or the two merged
    for head, rest in (
        ((a[0],), _quasi_shuffle(a[1:], b)),
        ((b[0],), _quasi_shuffle(a, b[1:])),
        ((a[0] + b[0],), _quasi_shuffle(a[1:], b[1:])),
    ):
        for comp, mult in rest:
            key = head + comp
            out[key] = out.get(key, 0) + mult
    return tuple(sorted(out.items()))


def qsym_product(x: QSF, y: QSF) -> QSF:
    out: dict = {}
    for a, ca in x.terms.items():
        for b, cb in y.terms.items():
            c = ca * cb
            for comp, mult in _quasi_shuffle(a, b):
                out[comp] = out.get(comp, Fraction(0)) + c * mult
    return QSF(out)


def qsym_realize(alpha, k: int) -> SparsePoly:
    """M_alpha as a polynomial in x1..xk (0 when k < length of alpha)."""
    alpha = check_composition(alpha)
    if k < 0:
        raise ValueError("variable count must be >= 0")
    names = [f"x{i}" for i in range(1, k + 1)]
    out = SparsePoly.zero()
    for idx in combinations(range(k), len(alpha)):
        mono = SparsePoly.one()
        for pos, part in zip(idx, alpha):
            mono = mono * SparsePoly.monomial({names[pos]: part})
        out = out + mono
    return out


def qsf_realize(x: QSF, k: int) -> SparsePoly:
    out = SparsePoly.zero()
    for a, c in x.terms.items():
        out = out + qsym_realize(a, k) * c
    return out


def pairing(x: NCF, q: QSF) -> Fraction:
    """<Z_alpha, M_beta> = delta, extended bilinearly."""
    total = Fraction(0)
    for w, c in x.terms.items():
        d = q.terms.get(w)
        if d is not None:
            total += c * d
    return total


def tensor_pairing(t: TensorNCF, q1: QSF, q2: QSF) -> Fraction:
    """<x (x) y, q (x) q'> = <x,q><y,q'> summed over the tensor terms."""
    total = Fraction(0)
    for (w1, w2), c in t.terms.items():
        d1 = q1.terms.get(w1)
        if d1 is None:
            continue
        d2 = q2.terms.get(w2)
        if d2 is not None:
            total += c * d1 * d2
    return total
