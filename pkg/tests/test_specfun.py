"""Unit and property tests for the special-function kernels."""

import math
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from betatails.specfun import (
    ConvergenceError,
    DEFAULT_CONFIG,
    EvalConfig,
    gauss_2f1_terminating,
    kummer_1f1,
    log_gamma,
    log_kummer_1f1,
    pochhammer,
    regularized_incomplete_beta,
)


class TestEvalConfig:
    def test_defaults(self):
        assert DEFAULT_CONFIG.rel_tol == 1e-12
        assert DEFAULT_CONFIG.max_iter == 10_000

    @pytest.mark.parametrize("rel_tol", [0.0, -1e-9, 1e-6, 1.0])
    def test_rejects_bad_tolerance(self, rel_tol):
        with pytest.raises(ValueError):
            EvalConfig(rel_tol=rel_tol)

    def test_rejects_small_iteration_cap(self):
        with pytest.raises(ValueError):
            EvalConfig(max_iter=99)


class TestPochhammer:
    def test_zero_order_is_one(self):
        assert pochhammer(5, 0) == 1

    def test_rising_factorial_of_one_is_factorial(self):
        assert pochhammer(1, 4) == 24

    def test_half_integer(self):
        assert pochhammer(Fraction(1, 2), 3) == Fraction(15, 8)

    def test_exact_for_rational_input(self):
        assert isinstance(pochhammer(Fraction(1, 3), 2), Fraction)
        assert isinstance(pochhammer(0.5, 2), float)

    def test_negative_order_rejected(self):
        with pytest.raises(ValueError):
            pochhammer(2, -1)

    @given(
        st.fractions(min_value=-10, max_value=10, max_denominator=20),
        st.integers(min_value=0, max_value=15),
    )
    def test_recurrence(self, x, k):
        assert pochhammer(x, k + 1) == pochhammer(x, k) * (x + k)


class TestLogGamma:
    def test_at_one(self):
        assert abs(log_gamma(1.0)) < 1e-14

    def test_factorial_value(self):
        assert log_gamma(5.0) == pytest.approx(math.log(24.0), rel=1e-14)

    def test_half(self):
        assert log_gamma(0.5) == pytest.approx(0.5 * math.log(math.pi), rel=1e-14)

    @pytest.mark.parametrize("x", [0.0, -1.0, -0.5])
    def test_domain_error(self, x):
        with pytest.raises(ValueError):
            log_gamma(x)

    @pytest.mark.parametrize("x", [0.5, 1.0, 2.5, 10.0, 100.0])
    def test_ratio_identity(self, x):
        ratio = math.exp(log_gamma(x + 1.0)) / math.exp(log_gamma(x))
        assert ratio == pytest.approx(x, rel=1e-12)

    def test_matches_stdlib_over_wide_range(self):
        # relative error budget 1e-13 on [1e-3, 1e6]
        for i in range(200):
            x = 10.0 ** (-3.0 + 9.0 * i / 199)
            mine = log_gamma(x)
            ref = math.lgamma(x)
            assert abs(mine - ref) <= 1e-13 * max(1.0, abs(ref))


class TestRegularizedIncompleteBeta:
    def test_uniform_cdf(self):
        assert regularized_incomplete_beta(1.0, 1.0, 0.3) == pytest.approx(0.3, rel=1e-13)

    def test_symmetric_median(self):
        assert regularized_incomplete_beta(2.0, 2.0, 0.5) == pytest.approx(0.5, rel=1e-13)

    def test_skewed_value_against_quadrature_oracle(self):
        # ratio of adaptive quadratures of x^(a-1)(1-x)^(b-1) over [0, 0.04] and [0, 1]
        expected = 0.9099370971728079
        assert regularized_incomplete_beta(2.0, 98.0, 0.04) == pytest.approx(
            expected, rel=1e-12
        )

    def test_endpoints(self):
        assert regularized_incomplete_beta(3.0, 4.0, 0.0) == 0.0
        assert regularized_incomplete_beta(3.0, 4.0, 1.0) == 1.0

    @pytest.mark.parametrize("a,b,x", [(0.0, 1.0, 0.5), (1.0, -2.0, 0.5), (1.0, 1.0, 1.5)])
    def test_domain_errors(self, a, b, x):
        with pytest.raises(ValueError):
            regularized_incomplete_beta(a, b, x)

    def test_convergence_failure_is_loud(self):
        # this near-crossover case needs ~260 fraction steps at full precision
        cfg = EvalConfig(rel_tol=1e-15, max_iter=100)
        with pytest.raises(ConvergenceError):
            regularized_incomplete_beta(1e5, 1e5, 0.499999, cfg)

    @given(
        st.floats(min_value=0.4, max_value=40.0),
        st.floats(min_value=0.4, max_value=40.0),
        st.integers(min_value=0, max_value=1024),
    )
    @settings(max_examples=200)
    def test_symmetry_identity(self, a, b, k):
        # dyadic x keeps both x and 1-x exactly representable, so the check
        # probes the kernels rather than argument rounding
        x = k / 1024.0
        total = regularized_incomplete_beta(a, b, x) + regularized_incomplete_beta(
            b, a, 1.0 - x
        )
        assert abs(total - 1.0) <= 2 * DEFAULT_CONFIG.rel_tol

    @pytest.mark.parametrize("a,b", [(0.5, 0.5), (2.0, 98.0), (7.0, 11.0 / 3.0)])
    def test_monotone_in_x(self, a, b):
        prev = -1.0
        for i in range(101):
            cur = regularized_incomplete_beta(a, b, i / 100)
            assert cur >= prev - 1e-14
            prev = cur


class TestKummer1F1:
    def test_at_zero(self):
        assert kummer_1f1(3.0, 5.0, 0.0) == 1.0

    @pytest.mark.parametrize("t", [-20.0, -1.0, 0.5, 1.0, 10.0, 20.0])
    def test_equal_parameters_collapse_to_exp(self, t):
        assert kummer_1f1(2.5, 2.5, t) == pytest.approx(math.exp(t), rel=1e-12)

    def test_beta_mgf_value_against_quadrature_oracle(self):
        # integral of e^(t x) against the Beta(2, 98) density at t = 1
        assert kummer_1f1(2.0, 100.0, 1.0) == pytest.approx(1.0203009601146381, rel=1e-12)

    def test_negative_argument_kummer_transform(self):
        assert kummer_1f1(3.0, 7.0, -30.0) == pytest.approx(0.003279012345679066, rel=1e-11)

    def test_rejects_bad_lower_parameter(self):
        with pytest.raises(ValueError):
            kummer_1f1(1.0, 0.0, 1.0)

    def test_iteration_cap_is_loud(self):
        with pytest.raises(ConvergenceError):
            kummer_1f1(2.0, 100.0, 600.0, EvalConfig(max_iter=150))

    @pytest.mark.parametrize("t", [-20.0, -12.0, -4.0, -1.0, 1.0, 4.0, 12.0, 20.0])
    def test_beta_mgf_against_live_quadrature(self, t):
        # 1F1(a; a+b; t) is the Beta(a, b) MGF; compare at 10x the kernel tolerance
        import mpmath as mp

        a, b = 2.0, 98.0
        with mp.workdps(30):
            kernel = lambda u: u ** (a - 1) * (1 - u) ** (b - 1)
            oracle = mp.quad(lambda u: mp.e ** (t * u) * kernel(u), [0, 1]) / mp.quad(
                kernel, [0, 1]
            )
        assert kummer_1f1(a, a + b, t) == pytest.approx(
            float(oracle), rel=10 * DEFAULT_CONFIG.rel_tol
        )


class TestLogKummer1F1:
    @pytest.mark.parametrize("t", [-15.0, -2.0, 0.5, 3.0, 25.0])
    def test_agrees_with_plain_series(self, t):
        direct = kummer_1f1(2.0, 100.0, t)
        assert log_kummer_1f1(2.0, 100.0, t) == pytest.approx(math.log(direct), abs=1e-11)

    def test_far_beyond_double_overflow(self):
        cfg = EvalConfig(max_iter=20_000)
        assert log_kummer_1f1(2.0, 1000.0, 3000.0, cfg) == pytest.approx(
            914.4611250864599, rel=1e-12
        )

    def test_moderately_large_argument(self):
        assert log_kummer_1f1(2.0, 100.0, 500.0, EvalConfig(max_iter=20_000)) == pytest.approx(
            249.88445571439744, rel=1e-12
        )


class TestGauss2F1Terminating:
    def test_zero_order(self):
        assert gauss_2f1_terminating(Fraction(3, 2), 0, Fraction(7), Fraction(9)) == 1

    def test_two_term_sum(self):
        z = Fraction(3, 10)
        assert gauss_2f1_terminating(1, 1, 1, z) == 1 - z

    def test_four_term_sum(self):
        # hand sum of (2)_k (-3)_k / ((5)_k k!) (5/2)^k for k = 0..3
        assert gauss_2f1_terminating(2, 3, 5, Fraction(5, 2)) == Fraction(-1, 28)

    def test_vanishing_denominator(self):
        with pytest.raises(ZeroDivisionError):
            gauss_2f1_terminating(1, 3, -1, Fraction(1, 2))

    @given(
        st.fractions(min_value=-5, max_value=5, max_denominator=6),
        st.integers(min_value=0, max_value=8),
        st.fractions(min_value=Fraction(1, 4), max_value=6, max_denominator=6),
        st.fractions(min_value=-4, max_value=4, max_denominator=6),
    )
    def test_matches_independent_pochhammer_summation(self, a, d, c, z):
        def poch(x, k):
            out = Fraction(1)
            for i in range(k):
                out *= x + i
            return out

        direct = sum(
            poch(a, k) * poch(Fraction(-d), k) / (poch(c, k) * math.factorial(k)) * z**k
            for k in range(d + 1)
        )
        assert gauss_2f1_terminating(a, d, c, z) == direct
