"""Noncommutative symmetric functions.

``NCF`` is the free associative Q-algebra on generators Z_1, Z_2, ...; a word
(i_1, ..., i_k) stands for the product Z_{i_1} ... Z_{i_k} and has weight
i_1 + ... + i_k. ``TensorNCF`` is its tensor square. Both plug into
``TruncSeries`` as coefficient rings through the tags ``NCFRing`` and
``TensorNCFRing``.

The coproduct here is the one dual to the quasi-shuffle product on the
monomial quasisymmetric basis: Delta Z_i = sum_{j+k=i} Z_j (x) Z_k with
Z_0 = 1, extended multiplicatively. The Cartier analogues of the complete
and power-sum families are built from the grouplike-normalized series
Z(T) = 1 + Z_1 T + Z_2 T^2 + ...
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from ..exactcore import TruncSeries

Word = tuple  # tuple of positive ints


def _check_word(w) -> Word:
    w = tuple(int(i) for i in w)
    if any(i < 1 for i in w):
        raise ValueError(f"generator indices must be positive: {w}")
    return w


class NCF:
    """Element of the free algebra on Z_1, Z_2, ... over Q."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        clean = {}
        for w, c in (terms or {}).items():
            c = Fraction(c)
            if c:
                clean[_check_word(w)] = c
        object.__setattr__(self, "terms", clean)

    def __setattr__(self, name, value):
        raise AttributeError("NCF is immutable")

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls) -> "NCF":
        return cls({})

    @classmethod
    def one(cls) -> "NCF":
        return cls({(): Fraction(1)})

    @classmethod
    def gen(cls, i: int) -> "NCF":
        """Z_i, with Z_0 = 1."""
        if i == 0:
            return cls.one()
        return cls({(i,): Fraction(1)})

    @classmethod
    def word(cls, w, coeff=1) -> "NCF":
        return cls({tuple(w): Fraction(coeff)})

    # -- arithmetic --------------------------------------------------------

    def __add__(self, other):
        if not isinstance(other, NCF):
            return NotImplemented
        out = dict(self.terms)
        for w, c in other.terms.items():
            out[w] = out[w] + c if w in out else c
        return NCF(out)

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        return NCF({w: -c for w, c in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return NCF({w: c * other for w, c in self.terms.items()})
        if not isinstance(other, NCF):
            return NotImplemented
        out: dict = {}
        for w1, c1 in self.terms.items():
            for w2, c2 in other.terms.items():
                w = w1 + w2
                c = c1 * c2
                out[w] = out[w] + c if w in out else c
        return NCF(out)

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self * other
        return NotImplemented

    def __eq__(self, other):
        if isinstance(other, NCF):
            return self.terms == other.terms
        if other == 0:
            return not self.terms
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __bool__(self):
        return bool(self.terms)

    # -- structure ---------------------------------------------------------

    def coeff(self, w) -> Fraction:
        return self.terms.get(tuple(w), Fraction(0))

    def is_homogeneous(self, wt: int) -> bool:
        return all(sum(w) == wt for w in self.terms)

    def graded_piece(self, wt: int) -> "NCF":
        return NCF({w: c for w, c in self.terms.items() if sum(w) == wt})

    def max_weight(self) -> int:
        return max((sum(w) for w in self.terms), default=0)

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda wc: (sum(wc[0]), len(wc[0]), wc[0]))

    def __repr__(self):
        if not self.terms:
            return "NCF(0)"
        bits = []
        for w, c in self.sorted_terms():
            name = "Z" + str(list(w)).replace(" ", "") if w else "1"
            bits.append(f"{c}*{name}")
        return "NCF(" + " + ".join(bits) + ")"


class NCFRing:
    """Ring tag so TruncSeries can take NCF coefficients."""

    name = "NCF"

    @staticmethod
    def one():
        return NCF.one()

    @staticmethod
    def zero():
        return NCF.zero()


class TensorNCF:
    """Tensor square of NCF: terms (word, word) -> Q, factorwise product."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        clean = {}
        for (w1, w2), c in (terms or {}).items():
            c = Fraction(c)
            if c:
                clean[(_check_word(w1), _check_word(w2))] = c
        object.__setattr__(self, "terms", clean)

    def __setattr__(self, name, value):
        raise AttributeError("TensorNCF is immutable")

    @classmethod
    def zero(cls) -> "TensorNCF":
        return cls({})

    @classmethod
    def one(cls) -> "TensorNCF":
        return cls({((), ()): Fraction(1)})

    @classmethod
    def pure(cls, x: NCF, y: NCF) -> "TensorNCF":
        out = {}
        for w1, c1 in x.terms.items():
            for w2, c2 in y.terms.items():
                out[(w1, w2)] = c1 * c2
        return cls(out)

    def __add__(self, other):
        if not isinstance(other, TensorNCF):
            return NotImplemented
        out = dict(self.terms)
        for k, c in other.terms.items():
            out[k] = out[k] + c if k in out else c
        return TensorNCF(out)

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        return TensorNCF({k: -c for k, c in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return TensorNCF({k: c * other for k, c in self.terms.items()})
        if not isinstance(other, TensorNCF):
            return NotImplemented
        out: dict = {}
        for (a1, a2), c1 in self.terms.items():
            for (b1, b2), c2 in other.terms.items():
                k = (a1 + b1, a2 + b2)
                c = c1 * c2
                out[k] = out[k] + c if k in out else c
        return TensorNCF(out)

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self * other
        return NotImplemented

    def __eq__(self, other):
        if isinstance(other, TensorNCF):
            return self.terms == other.terms
        if other == 0:
            return not self.terms
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def coeff(self, w1, w2) -> Fraction:
        return self.terms.get((tuple(w1), tuple(w2)), Fraction(0))

    def flip(self) -> "TensorNCF":
        return TensorNCF({(w2, w1): c for (w1, w2), c in self.terms.items()})

    def sorted_terms(self):
        key = lambda kc: (sum(kc[0][0]) + sum(kc[0][1]), kc[0])
        return sorted(self.terms.items(), key=key)

    def __repr__(self):
        if not self.terms:
            return "TensorNCF(0)"
        bits = []
        for (w1, w2), c in self.sorted_terms():
            n1 = "Z" + str(list(w1)).replace(" ", "") if w1 else "1"
            n2 = "Z" + str(list(w2)).replace(" ", "") if w2 else "1"
            bits.append(f"{c}*{n1}(x){n2}")
        return "TensorNCF(" + " + ".join(bits) + ")"


class TensorNCFRing:
    name = "NCF(x)NCF"

    @staticmethod
    def one():
        return TensorNCF.one()

    @staticmethod
    def zero():
        return TensorNCF.zero()


# -- structure maps dual to the quasi-shuffle product ------------------------


@lru_cache(maxsize=None)
def _gen_coproduct(i: int) -> TensorNCF:
    # Delta Z_i = sum_{j+k=i, j,k>=0} Z_j (x) Z_k, Z_0 = 1
    out = {}
    for j in range(i + 1):
        w1 = (j,) if j else ()
        w2 = (i - j,) if i - j else ()
        out[(w1, w2)] = Fraction(1)
    return TensorNCF(out)


def nsf_product(x: NCF, y: NCF) -> NCF:
    return x * y


def nsf_coproduct(x: NCF) -> TensorNCF:
    """Multiplicative extension of Delta Z_i = sum_{j+k=i} Z_j (x) Z_k."""
    out = TensorNCF.zero()
    for w, c in x.terms.items():
        t = TensorNCF.one()
        for i in w:
            t = t * _gen_coproduct(i)
        out = out + t * c
    return out


def apply_to_slot(t: TensorNCF, delta, slot: int) -> dict:
    """Apply a word-level coproduct to one slot of a 2-tensor.

    ``delta`` maps a word to a TensorNCF; returns a dict keyed by word
    triples, for coassociativity checks.
    """
    out: dict = {}
    for (w1, w2), c in t.terms.items():
        inner = delta(w1 if slot == 0 else w2)
        for (u, v), d in inner.terms.items():
            key = (u, v, w2) if slot == 0 else (w1, u, v)
            val = c * d
            out[key] = out.get(key, Fraction(0)) + val
    return {k: v for k, v in out.items() if v}


# -- grouplike-normalized generating series and the Cartier families ---------


def z_series(order: int, normalization: str = "grouplike") -> TruncSeries:
    """The generating series of the Z_i over NCFRing.

    grouplike: 1 + Z_1 T + Z_2 T^2 + ...   (multiplicative contexts)
    diffeo:    T + Z_1 T^2 + Z_2 T^3 + ... (compositional contexts)
    """
    if normalization == "grouplike":
        coeffs = {(0,): NCF.one()}
        coeffs.update({(k,): NCF.gen(k) for k in range(1, order + 1)})
    elif normalization == "diffeo":
        coeffs = {(k,): NCF.gen(k - 1) for k in range(1, order + 1)}
    else:
        raise ValueError(f"unknown normalization {normalization!r}")
    return TruncSeries(NCFRing, order, 1, coeffs)


def sigma_series(n_max: int) -> TruncSeries:
    """Solution of Sigma(T) * Z(-T) = 1 with the grouplike normalization."""
    z = z_series(n_max)
    z_neg = TruncSeries(
        NCFRing, n_max, 1, {e: c * Fraction((-1) ** e[0]) for e, c in z.coeffs.items()}
    )
    return z_neg.mult_inverse()


def psi_series(n_max: int, side: str = "right") -> TruncSeries:
    """T * Z'(T) * Z(T)^(-1) (side="right"), or T * Z(T)^(-1) * Z'(T).

    Grouplike normalization; the result has zero constant term and its T^k
    coefficient is the k-th noncommutative power sum.
    """
    z = z_series(n_max + 1)
    zp = z.derivative()  # order n_max
    zinv = z.truncate(n_max).mult_inverse()
    t = TruncSeries.var(NCFRing, n_max)
    if side == "right":
        return t * zp * zinv
    if side == "left":
        return t * zinv * zp
    raise ValueError(f"side must be 'right' or 'left', got {side!r}")


def cartier(n_max: int, side: str = "right") -> tuple[list[NCF], list[NCF]]:
    """The families (Sigma_1..Sigma_n, Psi_1..Psi_n) as NCF elements."""
    if n_max < 1:
        raise ValueError("n_max must be >= 1")
    sig = sigma_series(n_max)
    psi = psi_series(n_max, side)
    sigmas = [sig.coeff(k) for k in range(1, n_max + 1)]
    psis = [psi.coeff(k) for k in range(1, n_max + 1)]
    return sigmas, psis
