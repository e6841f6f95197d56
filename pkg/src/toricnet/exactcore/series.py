"""Truncated power series in central variables over pluggable rings.

A series carries an explicit truncation order N: coefficients are stored for
total degree <= N and anything beyond is unknown, not zero. Binary operations
clamp to the minimum order of the operands.

Coefficients live in any associative unital Q-algebra exposed through a small
ring tag: an object with ``one()`` and ``zero()`` whose elements support
``+``, ``-``, unary ``-``, ``*`` (possibly noncommutative) and multiplication
by int/Fraction scalars. The series variables are central: they commute with
every coefficient, but coefficients need not commute with each other, and all
operations here keep coefficient products in left-to-right order.
"""

from __future__ import annotations

from fractions import Fraction
from math import factorial


class QRing:
    """Ring tag for plain rational coefficients."""

    name = "Q"

    @staticmethod
    def one():
        return Fraction(1)

    @staticmethod
    def zero():
        return Fraction(0)


class PolyRing:
    """Ring tag for SparsePoly coefficients (commutative)."""

    name = "Poly"

    @staticmethod
    def one():
        from .polynomials import SparsePoly

        return SparsePoly.one()

    @staticmethod
    def zero():
        from .polynomials import SparsePoly

        return SparsePoly.zero()


class TruncSeries:
    """Power series truncated at total degree ``order`` in ``nvars`` variables."""

    __slots__ = ("ring", "order", "nvars", "coeffs")

    def __init__(self, ring, order: int, nvars: int = 1, coeffs=None):
        if order < 0:
            raise ValueError("order must be >= 0")
        if nvars < 1:
            raise ValueError("need at least one variable")
        self.ring = ring
        self.order = order
        self.nvars = nvars
        zero = ring.zero()
        clean = {}
        for e, c in (coeffs or {}).items():
            e = tuple(e)
            if len(e) != nvars or any(x < 0 for x in e):
                raise ValueError(f"bad exponent {e}")
            if sum(e) > order:
                continue
            if c != zero:
                clean[e] = c
        self.coeffs = clean

    # -- constructors ---------------------------------------------------

    @classmethod
    def zero(cls, ring, order: int, nvars: int = 1) -> "TruncSeries":
        return cls(ring, order, nvars, {})

    @classmethod
    def one(cls, ring, order: int, nvars: int = 1) -> "TruncSeries":
        return cls(ring, order, nvars, {(0,) * nvars: ring.one()})

    @classmethod
    def const(cls, ring, value, order: int, nvars: int = 1) -> "TruncSeries":
        return cls(ring, order, nvars, {(0,) * nvars: value})

    @classmethod
    def var(cls, ring, order: int, index: int = 0, nvars: int = 1) -> "TruncSeries":
        e = [0] * nvars
        e[index] = 1
        return cls(ring, order, nvars, {tuple(e): ring.one()})

    @classmethod
    def from_coeffs(cls, ring, seq, order: int | None = None) -> "TruncSeries":
        """1-variable series from a coefficient list [c0, c1, ...]."""
        seq = list(seq)
        if order is None:
            order = len(seq) - 1
        return cls(ring, order, 1, {(k,): c for k, c in enumerate(seq)})

    # -- basics -----------------------------------------------------------

    def coeff(self, *exps):
        if len(exps) == 1 and isinstance(exps[0], tuple):
            exps = exps[0]
        if len(exps) != self.nvars:
            raise ValueError("wrong arity")
        return self.coeffs.get(tuple(exps), self.ring.zero())

    def truncate(self, order: int) -> "TruncSeries":
        if order > self.order:
            raise ValueError("cannot extend a truncated series")
        return TruncSeries(self.ring, order, self.nvars, self.coeffs)

    def _compat(self, other: "TruncSeries"):
        if self.ring is not other.ring:
            raise ValueError(
                f"ring mismatch: {getattr(self.ring, 'name', self.ring)} vs "
                f"{getattr(other.ring, 'name', other.ring)}"
            )
        if self.nvars != other.nvars:
            raise ValueError("variable arity mismatch")
        return min(self.order, other.order)

    def __eq__(self, other):
        if not isinstance(other, TruncSeries):
            return NotImplemented
        return (
            self.ring is other.ring
            and self.nvars == other.nvars
            and self.order == other.order
            and self.coeffs == other.coeffs
        )

    def __hash__(self):
        raise TypeError("TruncSeries is not hashable")

    # -- linear structure ---------------------------------------------------

    def __add__(self, other):
        if not isinstance(other, TruncSeries):
            return NotImplemented
        n = self._compat(other)
        out = dict(self.coeffs)
        for e, c in other.coeffs.items():
            out[e] = out[e] + c if e in out else c
        return TruncSeries(self.ring, n, self.nvars, out)

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        return TruncSeries(self.ring, self.order, self.nvars, {e: -c for e, c in self.coeffs.items()})

    def scale(self, scalar) -> "TruncSeries":
        """Multiply every coefficient by an int/Fraction scalar."""
        return TruncSeries(
            self.ring, self.order, self.nvars, {e: c * scalar for e, c in self.coeffs.items()}
        )

    def scale_left(self, elem) -> "TruncSeries":
        """Left-multiply every coefficient by a ring element."""
        return TruncSeries(
            self.ring, self.order, self.nvars, {e: elem * c for e, c in self.coeffs.items()}
        )

    # -- multiplicative structure --------------------------------------------

    def __mul__(self, other):
        if not isinstance(other, TruncSeries):
            return NotImplemented
        n = self._compat(other)
        out: dict = {}
        for e1, c1 in self.coeffs.items():
            d1 = sum(e1)
            if d1 > n:
                continue
            for e2, c2 in other.coeffs.items():
                if d1 + sum(e2) > n:
                    continue
                e = tuple(x + y for x, y in zip(e1, e2))
                prod = c1 * c2
                out[e] = out[e] + prod if e in out else prod
        return TruncSeries(self.ring, n, self.nvars, out)

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative series power")
        result = TruncSeries.one(self.ring, self.order, self.nvars)
        for _ in range(k):
            result = result * self
        return result

    def constant_term(self):
        return self.coeff((0,) * self.nvars)

    def has_zero_constant_term(self) -> bool:
        return self.constant_term() == self.ring.zero()

    # -- composition -----------------------------------------------------------

    def compose(self, inner: "TruncSeries") -> "TruncSeries":
        """Substitute ``inner`` for the single variable of this series."""
        if self.nvars != 1:
            raise ValueError("compose expects a 1-variable outer series")
        return self.compose_many([inner])

    def compose_many(self, inners: list["TruncSeries"]) -> "TruncSeries":
        """Substitute inners[i] for variable i. All inners share arity and ring.

        Coefficients of the outer series multiply from the left, and the inner
        powers are assembled in variable order, so for noncommutative rings
        the result is sum_e c_e * g_1^{e_1} * ... * g_k^{e_k}.
        """
        if len(inners) != self.nvars:
            raise ValueError("wrong number of inner series")
        g0 = inners[0]
        n = min([self.order] + [g.order for g in inners])
        for g in inners:
            if g.ring is not self.ring:
                raise ValueError("ring mismatch in composition")
            if g.nvars != g0.nvars:
                raise ValueError("inner series arity mismatch")
            if not g.has_zero_constant_term():
                raise ValueError("inner series must have zero constant term")
        nv = g0.nvars
        # precompute powers of each inner series up to what the monomials use
        max_exp = [0] * self.nvars
        for e in self.coeffs:
            for i, x in enumerate(e):
                max_exp[i] = max(max_exp[i], x)
        powers = []
        for i, g in enumerate(inners):
            gt = g.truncate(n) if g.order != n else g
            ps = [TruncSeries.one(self.ring, n, nv)]
            for _ in range(max_exp[i]):
                ps.append(ps[-1] * gt)
            powers.append(ps)
        out = TruncSeries.zero(self.ring, n, nv)
        for e, c in sorted(self.coeffs.items()):
            if sum(e) > n:
                # a monomial of degree d contributes starting at degree d
                continue
            term = TruncSeries.one(self.ring, n, nv)
            for i, x in enumerate(e):
                if x:
                    term = term * powers[i][x]
            out = out + term.scale_left(c)
        return out

    def comp_inverse(self) -> "TruncSeries":
        """Compositional inverse g with self(g(T)) = T (degree by degree).

        Requires a 1-variable series T + (higher order). The result is also a
        two-sided inverse; tests verify g(self(T)) = T.
        """
        if self.nvars != 1:
            raise ValueError("compositional inverse needs a 1-variable series")
        one, zero = self.ring.one(), self.ring.zero()
        if self.coeff(0) != zero or self.coeff(1) != one:
            raise ValueError("compositional inverse needs the form T + O(T^2)")
        g = {(1,): one}
        for k in range(2, self.order + 1):
            partial = TruncSeries(self.ring, k, 1, g)
            val = self.truncate(k).compose(partial).coeff(k)
            if val != zero:
                g[(k,)] = -val
        return TruncSeries(self.ring, self.order, 1, g)

    def mult_inverse(self) -> "TruncSeries":
        """Multiplicative inverse of a series with constant term 1.

        For unit constant term the inverse is two-sided even over
        noncommutative rings (the Neumann series only involves powers of one
        element); computed from u*v = 1.
        """
        if self.nvars != 1:
            raise ValueError("mult_inverse implemented for 1-variable series")
        one = self.ring.one()
        if self.constant_term() != one:
            raise ValueError("mult_inverse needs constant term 1")
        inv = {(0,): one}
        for k in range(1, self.order + 1):
            acc = self.ring.zero()
            for j in range(1, k + 1):
                u = self.coeff(j)
                v = inv.get((k - j,))
                if u != self.ring.zero() and v is not None:
                    acc = acc + u * v
            if acc != self.ring.zero():
                inv[(k,)] = -acc
        return TruncSeries(self.ring, self.order, 1, inv)

    def derivative(self) -> "TruncSeries":
        if self.nvars != 1:
            raise ValueError("derivative implemented for 1-variable series")
        out = {}
        for (k,), c in self.coeffs.items():
            if k >= 1:
                out[(k - 1,)] = c * k
        return TruncSeries(self.ring, max(self.order - 1, 0), 1, out)

    def shift_down(self) -> "TruncSeries":
        """Divide by the variable: T^k -> T^(k-1). Needs zero constant term."""
        if self.nvars != 1:
            raise ValueError("shift_down implemented for 1-variable series")
        if not self.has_zero_constant_term():
            raise ValueError("series is not divisible by the variable")
        out = {(k - 1,): c for (k,), c in self.coeffs.items() if k >= 1}
        return TruncSeries(self.ring, max(self.order - 1, 0), 1, out)

    def exp(self) -> "TruncSeries":
        """exp of a series with zero constant term."""
        if not self.has_zero_constant_term():
            raise ValueError("exp needs zero constant term")
        out = TruncSeries.one(self.ring, self.order, self.nvars)
        term = TruncSeries.one(self.ring, self.order, self.nvars)
        for k in range(1, self.order + 1):
            term = term * self
            out = out + term.scale(Fraction(1, factorial(k)))
        return out

    def log(self) -> "TruncSeries":
        """log of a series with constant term 1."""
        if self.constant_term() != self.ring.one():
            raise ValueError("log needs constant term 1")
        u = self - TruncSeries.one(self.ring, self.order, self.nvars)
        out = TruncSeries.zero(self.ring, self.order, self.nvars)
        term = TruncSeries.one(self.ring, self.order, self.nvars)
        for k in range(1, self.order + 1):
            term = term * u
            out = out + term.scale(Fraction((-1) ** (k + 1), k))
        return out

    def map_coeffs(self, fn, ring=None) -> "TruncSeries":
        """Apply ``fn`` to every coefficient (optionally into another ring)."""
        ring = ring or self.ring
        return TruncSeries(ring, self.order, self.nvars, {e: fn(c) for e, c in self.coeffs.items()})

    def embed(self, nvars: int, axes: list[int]) -> "TruncSeries":
        """View this series inside a larger variable set, axes[i] = new index."""
        if len(axes) != self.nvars:
            raise ValueError("axes must match arity")
        out = {}
        for e, c in self.coeffs.items():
            ne = [0] * nvars
            for i, x in enumerate(e):
                ne[axes[i]] = x
            out[tuple(ne)] = c
        return TruncSeries(self.ring, self.order, nvars, out)

    def __repr__(self):
        inside = ", ".join(f"{e}: {c}" for e, c in sorted(self.coeffs.items()))
        return f"TruncSeries(order={self.order}, nvars={self.nvars}, {{{inside}}})"
