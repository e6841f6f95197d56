from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from toricnet.exactcore import (
    QRing,
    SparsePoly,
    TruncSeries,
    ff_determinant,
    hermite_normal_form,
    identity,
    inverse_rational,
    lattice_kernel,
    mat_mul,
    rank,
    rational_rref,
    right_kernel_rational,
    smith_normal_form,
    solve_rational,
    transpose,
)
from toricnet.ncsf import NCF, NCFRing

x = SparsePoly.variable("x")
y = SparsePoly.variable("y")
z = SparsePoly.variable("z")


class TestSparsePoly:
    def test_arithmetic(self):
        p = (x + y) ** 2
        assert p == x * x + x * y * 2 + y * y
        assert p.coefficient({"x": 1, "y": 1}) == 2
        assert p.substitute({"x": 2, "y": 3}) == SparsePoly.const(25)
        assert (p - p).is_zero()

    def test_render(self):
        assert ((x + y) ** 2).render() == "y^2 + 2*x*y + x^2"
        assert SparsePoly.zero().render() == "0"
        assert (x * Fraction(-3, 2)).render() == "-3/2*x"

    def test_scalar_coercion(self):
        assert x * 2 == x + x
        assert x * Fraction(1, 2) + x * Fraction(1, 2) == x
        assert (x + 1) - 1 == x

    def test_total_degree_and_constants(self):
        assert (x * y * y).total_degree() == 3
        assert SparsePoly.const(7).is_constant()
        assert SparsePoly.const(7).constant_value() == 7
        assert not x.is_constant()


class TestMatrices:
    def test_determinant_golden(self):
        assert ff_determinant([[Fraction(1), Fraction(2)], [Fraction(3), Fraction(4)]]) == -2
        # Vandermonde on three symbols
        v = ff_determinant(
            [
                [SparsePoly.one(), x, x * x],
                [SparsePoly.one(), y, y * y],
                [SparsePoly.one(), z, z * z],
            ]
        )
        assert v == (y - x) * (z - x) * (z - y)

    def test_determinant_fraction_exactness(self):
        hilbert = [[Fraction(1, i + j + 1) for j in range(4)] for i in range(4)]
        assert ff_determinant(hilbert) == Fraction(1, 6048000)

    def test_hermite(self):
        a = [[2, 4], [1, 3]]
        h, u = hermite_normal_form(a)
        assert mat_mul(u, a) == h
        assert ff_determinant([[Fraction(e) for e in row] for row in u]) in (1, -1)
        assert h == [[1, 1], [0, 2]]

    def test_smith(self):
        assert smith_normal_form([[2, 0], [0, 3]]) == [1, 6]
        assert smith_normal_form([[2]]) == [2]
        assert smith_normal_form([[1, 0], [0, 1]]) == [1, 1]

    def test_lattice_kernel(self):
        cayley = [[2, 1, 0], [0, 1, 2], [1, 1, 1]]
        assert lattice_kernel(cayley) == [[1, -2, 1]]
        for u in lattice_kernel(cayley):
            for row in cayley:
                assert sum(r * c for r, c in zip(row, u)) == 0

    def test_solve_and_inverse(self):
        a = [[Fraction(2), Fraction(1)], [Fraction(1), Fraction(3)]]
        b = [Fraction(5), Fraction(10)]
        sol = solve_rational(a, b)
        assert sol == [Fraction(1), Fraction(3)]
        inv = inverse_rational(a)
        assert mat_mul(a, inv) == identity(2)
        assert solve_rational([[1, 1], [1, 1]], [0, 1]) is None

    def test_rref_rank_kernel(self):
        a = [[1, 2, 3], [2, 4, 6], [1, 0, 1]]
        assert rank(a) == 2
        basis = right_kernel_rational(a)
        assert len(basis) == 1
        for v in basis:
            for row in a:
                assert sum(Fraction(r) * c for r, c in zip(row, v)) == 0
        r, pivots = rational_rref([[0, 1], [1, 0]])
        assert r == [[Fraction(1), Fraction(0)], [Fraction(0), Fraction(1)]]
        assert pivots == [0, 1]

    @settings(max_examples=40, deadline=None)
    @given(
        st.lists(
            st.lists(st.integers(-5, 5), min_size=3, max_size=3),
            min_size=3,
            max_size=3,
        )
    )
    def test_inverse_property(self, rows):
        a = [[Fraction(e) for e in row] for row in rows]
        inv = inverse_rational(a)
        if inv is None:
            assert ff_determinant(a) == 0
        else:
            assert mat_mul(a, inv) == identity(3)

    @settings(max_examples=40, deadline=None)
    @given(
        st.lists(
            st.lists(st.integers(-4, 4), min_size=4, max_size=4),
            min_size=2,
            max_size=4,
        )
    )
    def test_kernel_property(self, rows):
        for v in right_kernel_rational(rows):
            for row in rows:
                assert sum(Fraction(r) * c for r, c in zip(row, v)) == 0
        assert rank(rows) + len(right_kernel_rational(rows)) == 4

    def test_transpose(self):
        assert transpose([[1, 2, 3], [4, 5, 6]]) == [[1, 4], [2, 5], [3, 6]]


def qvar(order):
    return TruncSeries.var(QRing, order)


class TestTruncSeries:
    def test_compose_golden(self):
        t = qvar(4)
        f = t + t * t
        out = f.compose(f)
        assert [out.coeffs.get((k,), Fraction(0)) for k in range(1, 5)] == [1, 2, 2, 1]

    def test_compose_identity(self):
        t = qvar(5)
        g = t + (t * t).scale(3)
        assert t.compose(g) == g

    def test_compose_free_coefficient_order(self):
        # outer coefficients multiply from the left: Z1 lands before Z2
        t = TruncSeries.var(NCFRing, 4)
        f = t + (t * t).scale_left(NCF.gen(1))
        g = t + (t * t).scale_left(NCF.gen(2))
        out = f.compose(g)
        assert out.coeffs[(2,)] == NCF.gen(1) + NCF.gen(2)
        assert out.coeffs[(3,)] == 2 * (NCF.gen(1) * NCF.gen(2))
        assert out.coeffs[(4,)] == NCF.gen(1) * NCF.gen(2) * NCF.gen(2)

    def test_comp_inverse_catalan(self):
        t = qvar(4)
        inv = (t + t * t).comp_inverse()
        assert [inv.coeffs.get((k,), Fraction(0)) for k in range(1, 5)] == [1, -1, 2, -5]
        assert (t + t * t).compose(inv) == t

    def test_comp_inverse_symbolic(self):
        from toricnet.exactcore import PolyRing

        t1 = SparsePoly.variable("t1")
        t2 = SparsePoly.variable("t2")
        t = TruncSeries.var(PolyRing, 3)
        f = t + (t * t).scale_left(t1) + (t * t * t).scale_left(t2)
        inv = f.comp_inverse()
        assert inv.coeffs[(2,)] == -t1
        assert inv.coeffs[(3,)] == t1 * t1 * 2 - t2

    def test_mult_inverse(self):
        t = qvar(6)
        geo = (TruncSeries.one(QRing, 6) - t).mult_inverse()
        assert all(geo.coeffs.get((k,)) == 1 for k in range(7))

    def test_exp_log_roundtrip(self):
        t = qvar(6)
        u = t + (t * t).scale(Fraction(1, 3))
        assert u.exp().log() == u
        lg = (TruncSeries.one(QRing, 3) + t.truncate(3)).log()
        assert [lg.coeffs.get((k,), Fraction(0)) for k in range(1, 4)] == [
            1,
            Fraction(-1, 2),
            Fraction(1, 3),
        ]

    def test_shift_down_drops_order(self):
        t = qvar(5)
        s = (t + t * t).shift_down()
        assert s.order == 4
        assert s.coeffs.get((0,)) == 1
        assert s.coeffs.get((1,)) == 1

    def test_derivative(self):
        t = qvar(4)
        d = (t * t * t).derivative()
        assert d.coeffs.get((2,)) == 3

    def test_exp_requires_zero_constant(self):
        one = TruncSeries.one(QRing, 3)
        with pytest.raises(ValueError):
            one.exp()
