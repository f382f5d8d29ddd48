"""Sandwich bounds, closed-form re-derivation, digamma-difference bound."""

import random
from fractions import Fraction as F

import mpmath
import pytest

from betabound.polys import Poly, RationalFn
from betabound.psibounds import (
    A_LARGE,
    A_SMALL,
    PRINTED_LX,
    alzer_bracket_rf,
    alzer_psi_diff_lower,
    closed_form_mismatches,
    derive_lx,
    derive_lxx,
    l_value,
    log_arguments,
    lx,
    lx_general,
    lxx,
    lxx_general,
    sandwich_check,
    sandwich_margins,
    verify_closed_forms,
)
from betabound.specials import context, psi, psi1, to_mpf

HP = context(60)
mpmath.mp.dps = 60


class TestPrintedForms:
    def test_lx_exact_values(self):
        assert lx(0, A_SMALL) == F(183, 110)
        assert lx(1, A_SMALL) == F(2169, 3362)
        assert lx(1, A_LARGE) == F(5031, 7802)

    def test_lxx_exact_values(self):
        assert lxx(0, A_SMALL) == F(-14979, 6050)
        assert lxx(0, A_LARGE) == F(-139611, 69938)

    def test_lxx_negative_on_samples(self):
        for x in (F(1, 10), F(1), F(5)):
            assert lxx(x, A_SMALL) < 0
            assert lxx(x, A_LARGE) < 0

    def test_high_precision_path_agrees_with_exact(self):
        for a in (A_SMALL, A_LARGE):
            exact = lx(F(1, 3), a)
            hp = lx(HP.mpf(1) / 3, a)
            assert abs(hp - to_mpf(HP, exact)) < HP.mpf("1e-45")

    def test_only_tabulated_parameters(self):
        with pytest.raises(KeyError):
            lx(1, F(1, 2))


class TestClosedFormDerivation:
    def test_all_four_match(self):
        assert verify_closed_forms()
        assert closed_form_mismatches() == []

    def test_mismatch_detected(self):
        # a deliberately perturbed form must not pass the re-derivation
        good = PRINTED_LX[A_SMALL]
        bad = RationalFn(good.num + Poly((1,)), good.den)
        assert not derive_lx(A_SMALL).equivalent(bad)

    def test_symbolic_forms_evaluate_consistently(self):
        x = F(2, 7)
        assert derive_lx(A_LARGE)(x) == lx(x, A_LARGE)
        assert derive_lxx(A_SMALL)(x) == lxx(x, A_SMALL)

    def test_parameter_domain_guard(self):
        with pytest.raises(ValueError, match="domain error"):
            log_arguments(F(1, 15))

    def test_general_parameter_path(self):
        # derivative formulas at a = 2/5 agree with the printed forms
        hp = lx_general(HP.mpf(1) / 4, A_SMALL)
        assert abs(hp - to_mpf(HP, lx(F(1, 4), A_SMALL))) < HP.mpf("1e-45")
        hp2 = lxx_general(HP.mpf(1) / 4, A_SMALL)
        assert abs(hp2 - to_mpf(HP, lxx(F(1, 4), A_SMALL))) < HP.mpf("1e-45")

    def test_l_value_derivative_numerically(self):
        # centred difference of L(., 2/5) matches L_x to O(h^2)
        h = HP.mpf("1e-8")
        x = HP.mpf("0.6")
        fd = (l_value(x + h, A_SMALL) - l_value(x - h, A_SMALL)) / (2 * h)
        assert abs(fd - lx_general(x, A_SMALL)) < HP.mpf("1e-15")


class TestSandwich:
    def test_trigamma_at_two_inside_printed_interval(self):
        value = psi1(2)
        assert to_mpf(HP, F(5031, 7802)) < value < to_mpf(HP, F(2169, 3362))
        assert abs(value - (mpmath.mp.pi**2 / 6 - 1)) < HP.mpf("1e-45")

    def test_sandwich_at_spot_points(self):
        assert sandwich_check(1)
        assert sandwich_check("0.001")
        assert sandwich_check(50)

    def test_sandwich_margins_positive(self):
        margins = sandwich_margins(F(1, 2))
        assert all(m > 0 for m in margins.values())

    def test_log_spaced_grid(self):
        # 10^3 log-spaced points across [1e-4, 1e2]
        lo, hi = HP.ln(HP.mpf("1e-4")), HP.ln(HP.mpf(100))
        for k in range(1000):
            x = HP.exp(lo + (hi - lo) * k / 999)
            assert sandwich_check(x)

    def test_monotone_in_parameter(self):
        # a -> L_x(x, a) decreasing, a -> L_xx(x, a) increasing on (1/15, 1)
        for x in (HP.mpf("0.1"), HP.mpf(1), HP.mpf(3)):
            grid = [F(1, 15) + F(k, 16) for k in range(1, 15)]
            lx_vals = [lx_general(x, a) for a in grid]
            lxx_vals = [lxx_general(x, a) for a in grid]
            assert all(u > v for u, v in zip(lx_vals, lx_vals[1:]))
            assert all(u < v for u, v in zip(lxx_vals, lxx_vals[1:]))


class TestAlzerLowerBound:
    def test_empty_sum_reduces(self):
        assert alzer_psi_diff_lower(F(2), F(1, 3), 0) == (1 - F(1, 3)) / (2 + F(1, 3))

    def test_exact_rational_value(self):
        # (1/2) [1/4 + 1/((3/2)(1)) + 1/((5/2)(2)) + 1/((7/2)(3))]
        value = alzer_psi_diff_lower(F(1, 2), F(1, 2), 3)
        assert value == F(509, 840)
        gap = psi(F(3, 2)) - psi(F(1))
        assert gap > to_mpf(HP, value)

    def test_bound_below_difference_randomized(self):
        rng = random.Random(11)
        for _ in range(1000):
            x = HP.mpf(rng.uniform(0.05, 6.0))
            s = HP.mpf(rng.uniform(0.02, 0.98))
            gap = psi(x + 1) - psi(x + s)
            for n in (0, 1, 3, 7):
                assert gap > alzer_psi_diff_lower(x, s, n)

    def test_increasing_in_n(self):
        for x, s in ((F(1, 2), F(1, 5)), (F(3), F(4, 5)), (F(1, 10), F(1, 2))):
            values = [alzer_psi_diff_lower(x, s, n) for n in range(8)]
            assert all(u < v for u, v in zip(values, values[1:]))

    def test_bracket_rational_fn_matches_sum(self):
        bracket = alzer_bracket_rf(3)
        for s, arg in ((F(1, 3), F(2, 7)), (F(2, 5), F(5, 3)), (F(9, 10), F(6))):
            assert bracket(s, arg) == alzer_psi_diff_lower(arg, s, 3)

    def test_domain_errors(self):
        with pytest.raises(ValueError, match="domain error"):
            alzer_psi_diff_lower(F(1), F(3, 2), 1)
        with pytest.raises(ValueError, match="domain error"):
            alzer_psi_diff_lower(F(-1), F(1, 2), 1)
        with pytest.raises(ValueError, match="domain error"):
            alzer_psi_diff_lower(F(1), F(1, 2), -2)
