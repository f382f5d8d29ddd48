"""Exact polynomial algebra: worked values, ring laws, serialization."""

from fractions import Fraction as F

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from betabound.catalogue import load_catalogue
from betabound.polys import (
    BiPoly,
    Poly,
    RationalFn,
    bipoly_eval,
    poly_derivative,
    poly_eval,
    rationalfn_equal,
)

CAT = load_catalogue()
X = Poly.x()


class TestRationalSubstrate:
    def test_canonical_form(self):
        r = F(-6, -8)
        assert r.numerator == 3 and r.denominator == 4
        assert F(2, -4).denominator > 0

    def test_canonicalization_idempotent(self):
        r = F(-10, 15)
        assert F(r.numerator, r.denominator) == r
        assert (F(r.numerator, r.denominator).numerator, r.denominator) == (
            r.numerator,
            r.denominator,
        )

    def test_structural_equality(self):
        assert F(1, 2) == F(2, 4)
        assert hash(F(1, 2)) == hash(F(3, 6))


class TestPolyBasics:
    def test_trailing_zeros_stripped(self):
        assert Poly((1, 2, 0, 0)) == Poly((1, 2))
        assert Poly((0,)).is_zero
        assert Poly(()).is_zero
        assert Poly((0,)) == Poly(())

    def test_normalization_idempotent(self):
        p = Poly((F(2, 4), F(6, 3), 0))
        again = Poly(p.coeffs)
        assert again == p and again.coeffs == p.coeffs

    def test_degree_and_leading(self):
        assert Poly((1, 2, 3)).degree == 2
        assert Poly(()).degree == -1
        assert (Poly((0, 1)) * Poly((0, 1))).degree == 2

    def test_eval_printed_values(self):
        assert poly_eval(CAT.p[0], F(3, 20)) == F(75107551, 32000)
        assert poly_eval(CAT.q[4], F(1, 2)) == F(33, 2)

    def test_eval_zero_poly(self):
        assert poly_eval(Poly(()), F(7, 3)) == 0

    def test_derivative_power_rule(self):
        assert poly_derivative(X**2) == 2 * X
        assert poly_derivative(Poly((5,))).is_zero

    def test_derivative_of_quintic(self):
        # derivative of 37 + 90x - 93x^2 - 636x^3 - 810x^4 - 540x^5,
        # term by term
        expected = Poly((90, -186, -1908, -3240, -2700))
        assert poly_derivative(CAT.p[4]) == expected

    def test_compose(self):
        p = 1 + 2 * X + X**2
        assert p.compose(2 * X) == 1 + 4 * X + 4 * X**2

    def test_pow_and_mul_degree(self):
        p = (1 + X) ** 3
        assert p == 1 + 3 * X + 3 * X**2 + X**3

    def test_json_roundtrip(self):
        p = Poly((F(1, 3), -2, 0, F(7, 5)))
        assert Poly.from_json(p.to_json()) == p
        obj = p.to_json()
        assert obj["var"] == "x"
        assert obj["coeffs"][0] == "1/3"


class TestBiPolyBasics:
    def test_eval_constant_term(self):
        q = BiPoly({(0, 0): 4, (2, 1): 3})
        assert bipoly_eval(q, 0, 0) == 4

    def test_q_at_printed_points(self):
        assert bipoly_eval(CAT.Q, 0, 1) == -200
        assert bipoly_eval(CAT.Q, F(1, 2), F(1, 2)) == F(801, 8)

    def test_q_diagonal_matches_factored(self):
        x = F(1, 2)
        inner = 7137 + (1 - x) * (24365 + 375 * x**2) + 5300 * x**2
        factored = F(4, 625) * (1 - x) * (252 + (5 * x - 1) * inner)
        assert bipoly_eval(CAT.Q, x, 1 - x) == factored

    def test_horner_matches_term_sum(self):
        q = BiPoly({(0, 0): F(1, 2), (1, 2): -3, (2, 0): F(5, 7), (1, 1): 2})
        x, y = F(3, 4), F(-2, 5)
        direct = sum(c * x**i * y**j for (i, j), c in q.terms.items())
        assert q(x, y) == direct

    def test_substitution(self):
        x, y = BiPoly.x(), BiPoly.y()
        p = (x + y) * (x - y)
        assert p.substitute_y(Poly((0, 1))) == Poly(())  # y := x
        assert p.substitute_y(Poly((1,))) == X**2 - 1    # y := 1

    def test_partials(self):
        x, y = BiPoly.x(), BiPoly.y()
        p = x**2 * y + 3 * y**2
        assert p.partial_x() == 2 * x * y
        assert p.partial_y() == x**2 + 6 * y

    def test_json_roundtrip(self):
        q = BiPoly({(0, 0): F(1, 3), (2, 5): -7})
        assert BiPoly.from_json(q.to_json()) == q

    def test_no_zero_terms_stored(self):
        q = BiPoly({(1, 1): 1}) - BiPoly({(1, 1): 1})
        assert q.is_zero and q.terms == {}


class TestRationalFn:
    def test_zero_denominator_rejected(self):
        with pytest.raises(ZeroDivisionError):
            RationalFn(X, Poly(()))

    def test_cancellation(self):
        assert rationalfn_equal(RationalFn(X, X), RationalFn.from_ring(Poly((1,))))

    def test_bound_difference_identity(self):
        # x + y - xy - [1 - (5/2)(1-x)(1-y)/((1+x)(1+y))]
        #   == (1-x)(1-y)(3-2x-2y-2xy) / (2(1+x)(1+y))
        x, y = BiPoly.x(), BiPoly.y()
        lhs = (x + y - x * y) - (
            1 - (F(5, 2) * (1 - x) * (1 - y)) / ((1 + x) * (1 + y))
        )
        rhs = ((1 - x) * (1 - y) * (3 - 2 * x - 2 * y - 2 * x * y)) / (
            2 * (1 + x) * (1 + y)
        )
        assert rationalfn_equal(lhs, rhs)

    def test_quadratic_factorization_identity(self):
        # 3 - 2x - 2y - (x+y)^2 == (1-x-y)(3+x+y)
        x, y = BiPoly.x(), BiPoly.y()
        assert 3 - 2 * x - 2 * y - (x + y) ** 2 == (1 - x - y) * (3 + x + y)

    def test_derivative_quotient_rule(self):
        f = RationalFn(X**2, 1 + X)
        expected = (2 * X * (1 + X) - X**2) / ((1 + X) ** 2)
        assert f.derivative().equivalent(expected)

    def test_evaluation_pole(self):
        f = RationalFn(Poly((1,)), X - 1)
        with pytest.raises(ZeroDivisionError):
            f(F(1))


fractions_small = st.fractions(min_value=-100, max_value=100, max_denominator=30)
polys_small = st.lists(fractions_small, min_size=0, max_size=7).map(Poly)
nonzero_polys = polys_small.filter(lambda p: not p.is_zero)


@settings(deadline=None)
@given(polys_small, polys_small, polys_small)
def test_ring_laws(p, q, r):
    assert (p + q) + r == p + (q + r)
    assert (p * q) * r == p * (q * r)
    assert p + q == q + p
    assert p * q == q * p
    assert p * (q + r) == p * q + p * r


@settings(deadline=None)
@given(polys_small, polys_small)
def test_product_degree(p, q):
    if not p.is_zero and not q.is_zero:
        assert (p * q).degree == p.degree + q.degree


@settings(deadline=None)
@given(polys_small, polys_small, fractions_small)
def test_eval_is_ring_homomorphism(p, q, x):
    assert (p * q)(x) == p(x) * q(x)
    assert (p + q)(x) == p(x) + q(x)


@settings(deadline=None)
@given(polys_small, polys_small)
def test_derivative_linearity_and_product_rule(p, q):
    assert (p + q).derivative() == p.derivative() + q.derivative()
    assert (p * q).derivative() == p.derivative() * q + p * q.derivative()


@settings(deadline=None)
@given(nonzero_polys, nonzero_polys, nonzero_polys)
def test_rationalfn_equivalence_under_common_factor(num, den, s):
    f = RationalFn(num, den)
    g = RationalFn(num * s, den * s)
    assert rationalfn_equal(f, g)
    assert rationalfn_equal(g, f)
    assert rationalfn_equal(f, f)
