import math

import mpmath as mp
import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from scipy.integrate import quad

from cstk.errors import ConvergenceError, PoleError
from cstk.specfun import (
    SeriesControl,
    assoc_hermite,
    gamma_fn,
    hermite,
    hyp_pfq,
    laguerre,
    lauricella_triple,
    mittag_leffler,
    pcf_D,
    pochhammer,
)


class TestGamma:
    def test_at_one(self):
        assert gamma_fn(1.0) == 1.0

    def test_half_against_integral_oracle(self):
        # independent oracle: Gamma(1/2) = int_0^inf t^{-1/2} e^{-t} dt
        ref, _ = quad(lambda t: t**-0.5 * math.exp(-t), 0, np.inf)
        assert gamma_fn(0.5) == pytest.approx(ref, rel=1e-12)

    def test_recursion_from_sqrt_pi(self):
        ref = 3.5 * 2.5 * 1.5 * gamma_fn(1.5)
        assert gamma_fn(4.5) == pytest.approx(ref, rel=1e-14)

    def test_negative_non_integer(self):
        # reflection: Gamma(-0.5) = -2 sqrt(pi)
        assert gamma_fn(-0.5) == pytest.approx(-2.0 * math.sqrt(math.pi), rel=1e-13)

    @pytest.mark.parametrize("x", [0.0, -1.0, -7.0])
    def test_pole(self, x):
        with pytest.raises(PoleError):
            gamma_fn(x)

    def test_accuracy_sweep(self):
        with mp.workdps(30):
            for x in np.linspace(0.1, 50.0, 37):
                assert gamma_fn(float(x)) == pytest.approx(float(mp.gamma(float(x))), rel=1e-13)


class TestPochhammer:
    def test_order_zero(self):
        assert pochhammer(3.7, 0) == 1.0

    def test_product(self):
        assert pochhammer(3.0, 4) == 360.0

    def test_zero_factor(self):
        assert pochhammer(-2.0, 3) == 0.0

    @given(st.floats(-10, 10, allow_nan=False), st.integers(0, 20))
    def test_recurrence_exact(self, a, k):
        assert pochhammer(a, k + 1) == pochhammer(a, k) * (a + k)


class TestLaguerre:
    def test_degree_zero(self):
        assert laguerre(0, 1.3, 4.2) == 1.0

    def test_linear(self):
        assert laguerre(1, 0.0, 2.0) == pytest.approx(-1.0, abs=1e-15)

    def test_negative_parameter_value(self):
        assert laguerre(2, -1.0, 1.0) == pytest.approx(-0.5, abs=1e-14)

    @pytest.mark.parametrize("t", [0.5, 1.0, 3.0])
    @pytest.mark.parametrize("m", range(1, 7))
    def test_negative_parameter_identity(self, m, t):
        # L_m^(-k)(t) = (-t)^k (m-k)!/m! L_{m-k}^(k)(t) for 1 <= k <= m
        for k in range(1, m + 1):
            lhs = laguerre(m, -k, t)
            rhs = (-t) ** k * math.factorial(m - k) / math.factorial(m) * laguerre(m - k, k, t)
            assert lhs == pytest.approx(rhs, rel=1e-12, abs=1e-14)

    @pytest.mark.parametrize("alpha", [0.0, 1.0, 2.5])
    @pytest.mark.parametrize("x", [0.5, 2.0])
    def test_generating_identity(self, alpha, x):
        for s in [0.5, -0.4, 0.25]:
            total = sum(laguerre(m, alpha - m, x) * s**m for m in range(60))
            ref = (1.0 + s) ** alpha * math.exp(-x * s)
            assert total == pytest.approx(ref, rel=1e-10)

    def test_array_input(self):
        t = np.array([0.0, 1.0, 2.0])
        np.testing.assert_allclose(laguerre(1, 0.5, t), 1.5 - t)


class TestHermite:
    def test_examples(self):
        assert hermite(0, 0.3) == 1.0
        assert hermite(1, 1.5) == 3.0
        assert hermite(2, 1.0) == 2.0

    @given(st.integers(0, 10), st.floats(-3, 3, allow_nan=False))
    @settings(max_examples=40)
    def test_assoc_reduces_at_beta_zero(self, n, x):
        assert assoc_hermite(n, x, 0.0) == hermite(n, x)

    def test_assoc_examples(self):
        assert assoc_hermite(0, 0.7, 1.9) == 1.0
        assert assoc_hermite(1, 0.7, 1.9) == pytest.approx(1.4)
        assert assoc_hermite(2, 1.0, 0.5) == pytest.approx(1.0)


class TestParabolicCylinder:
    def test_nu_zero_is_gaussian(self):
        assert pcf_D(0.0, 2.0) == pytest.approx(math.exp(-1.0), rel=1e-14)

    @pytest.mark.parametrize("nu", [-1.3, -0.5, 0.7, 2.0])
    def test_value_at_origin(self, nu):
        ref = 2.0 ** (nu / 2.0) * math.sqrt(math.pi) / gamma_fn((1.0 - nu) / 2.0)
        assert pcf_D(nu, 0.0) == pytest.approx(ref, rel=1e-13)

    def test_d0_along_axes(self):
        for v in np.linspace(-4, 4, 17):
            assert abs(pcf_D(0.0, complex(v)) - np.exp(-v * v / 4)) <= 1e-12 * abs(np.exp(-v * v / 4))
            zi = 1j * v
            assert abs(pcf_D(0.0, zi) - np.exp(v * v / 4)) <= 1e-12 * np.exp(v * v / 4)

    def test_modulus_identity(self):
        # |D_0(i sqrt2)|^{-2} = e^{-1}
        val = abs(pcf_D(0.0, 1j * math.sqrt(2.0))) ** (-2)
        assert val == pytest.approx(math.exp(-1.0), rel=1e-13)

    @pytest.mark.parametrize(
        "nu,z",
        [(-1.3, 0.7 + 0.2j), (-0.5, 2.1j), (2.0, 1.5 + 0j), (-2.7, -0.4 + 1.1j), (-1.0, 3.0 + 0j)],
    )
    def test_against_mpmath(self, nu, z):
        with mp.workdps(40):
            ref = complex(mp.pcfd(nu, z))
        assert pcf_D(nu, z) == pytest.approx(ref, rel=1e-12)

    def test_budget_error(self):
        with pytest.raises(ConvergenceError):
            pcf_D(-1.3, 9.0j, SeriesControl(max_terms=5))


class TestHypPFQ:
    def test_at_zero(self):
        assert hyp_pfq([1.3, 0.4], [2.2, 0.9], 0.0) == 1.0

    def test_exponential(self):
        assert hyp_pfq([1.0], [1.0], 1.0) == pytest.approx(math.e, rel=1e-14)

    def test_kummer_example(self):
        lhs = math.exp(-2.0) * hyp_pfq([1.0], [2.0], 2.0)
        rhs = hyp_pfq([1.0], [2.0], -2.0)
        assert lhs == pytest.approx(rhs, rel=1e-12)

    @pytest.mark.parametrize("beta", [0.0, 0.5, 1.0, 2.3])
    def test_kummer_identity_sweep(self, beta):
        for t in np.linspace(0.0, 10.0, 21):
            lhs = math.exp(t) * hyp_pfq([beta], [beta + 1.0], -t)
            rhs = hyp_pfq([1.0], [beta + 1.0], t)
            assert abs(lhs - rhs) <= 1e-11 * abs(rhs)

    def test_2f2_against_mpmath(self):
        val = hyp_pfq([1.0, 3.1], [2.2, 1.4], 0.8 + 0.3j)
        with mp.workdps(30):
            ref = complex(mp.hyper([1.0, 3.1], [2.2, 1.4], 0.8 + 0.3j))
        assert val == pytest.approx(ref, rel=1e-13)

    def test_denominator_pole(self):
        with pytest.raises(PoleError):
            hyp_pfq([1.0], [-2.0], 0.5)

    def test_too_many_parameters(self):
        with pytest.raises(ValueError):
            hyp_pfq([1, 1, 1], [2], 0.5)

    def test_array_argument(self):
        t = np.array([0.0, 1.0, 2.0], dtype=complex)
        np.testing.assert_allclose(hyp_pfq([1.0], [1.0], t), np.exp(t), rtol=1e-13)


class TestMittagLeffler:
    def test_exponential_case(self):
        for t in [0.0, 0.7, 3.0]:
            assert mittag_leffler(1.0, 1.0, t) == pytest.approx(math.exp(t), rel=1e-13)

    def test_shifted(self):
        assert mittag_leffler(1.0, 2.0, 1.0) == pytest.approx(math.e - 1.0, rel=1e-13)

    def test_confluent_relation(self):
        beta, t = 1.3, 2.0
        lhs = gamma_fn(beta + 1.0) * mittag_leffler(1.0, beta + 1.0, t)
        rhs = hyp_pfq([1.0], [beta + 1.0], t).real
        assert lhs == pytest.approx(rhs, rel=1e-12)

    def test_parameter_validation(self):
        with pytest.raises(ValueError):
            mittag_leffler(0.0, 1.0, 1.0)


class TestLauricellaTriple:
    def test_at_origin(self):
        assert lauricella_triple(2.2, 1.2, 0.0, 0.0, 0.0) == 1.0

    @given(
        st.complex_numbers(max_magnitude=1.0, allow_nan=False, allow_infinity=False),
        st.complex_numbers(max_magnitude=1.0, allow_nan=False, allow_infinity=False),
        st.complex_numbers(max_magnitude=1.0, allow_nan=False, allow_infinity=False),
    )
    @settings(max_examples=25, deadline=None)
    def test_exponential_degeneration(self, u, v, w):
        # c=1, beta=0: the j-direction dies and (1)_{n+2k} cancels, e^{u+v} remains
        val = lauricella_triple(1.0, 0.0, u, v, w)
        assert val == pytest.approx(np.exp(u + v), rel=1e-12, abs=1e-12)

    def test_generating_example(self):
        c, beta, x, t = 2.2, 1.2, 0.3, 0.4
        val = lauricella_triple(c, beta, 2 * x * t, -t * t, -2 * t * t)
        direct = sum(t**n * assoc_hermite(n, x, beta) / pochhammer(c, n) for n in range(80))
        assert val == pytest.approx(direct, rel=1e-9)

    def test_pole_parameter(self):
        with pytest.raises(PoleError):
            lauricella_triple(-1.0, 0.5, 0.1, 0.1, 0.1)

    def test_budget_error(self):
        with pytest.raises(ConvergenceError):
            lauricella_triple(1.5, 0.5, 3.0, -2.0, 1.0, SeriesControl(max_terms=3))


class TestSeriesControl:
    def test_defaults(self):
        ctl = SeriesControl()
        assert ctl.rel_tol == 1e-13 and ctl.max_terms == 500

    @pytest.mark.parametrize("kwargs", [{"rel_tol": 0.0}, {"abs_tol": -1.0}, {"max_terms": 0}])
    def test_validation(self, kwargs):
        with pytest.raises(ValueError):
            SeriesControl(**kwargs)
