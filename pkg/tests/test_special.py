"""Foundational special functions: values, identities, and oracles."""

import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from scipy import integrate

from pqelliptic import (
    DivergenceError,
    DomainError,
    HypArgs,
    beta,
    contiguous_residual,
    euler_integral_oracle,
    f21_derivative,
    gauss_2f1,
    gauss_value_at_one,
    inc_beta,
    legendre_K_agm,
    ln_gamma,
)

# Frozen from the adaptive-quadrature oracle of the defining integral
# (Gauss-Kronrod with algebraic endpoint weights, abserr 3.0e-14).
BETA_HALF_TWOTHIRDS = 2.5871095592297904


class TestLnGamma:
    def test_at_one(self):
        assert ln_gamma(1.0) == pytest.approx(0.0, abs=1e-15)

    def test_at_half(self):
        assert ln_gamma(0.5) == pytest.approx(math.log(math.sqrt(math.pi)), abs=1e-14)

    def test_factorial(self):
        assert ln_gamma(5.0) == pytest.approx(math.log(24.0), abs=1e-13)

    def test_accuracy_band(self):
        # spot checks across (0, 100] against exact factorials
        for n in (2, 10, 20, 50, 100):
            assert ln_gamma(float(n)) == pytest.approx(
                math.log(math.factorial(n - 1)), rel=1e-13)

    def test_domain(self):
        with pytest.raises(DomainError):
            ln_gamma(0.0)
        with pytest.raises(DomainError):
            ln_gamma(-1.5)


class TestBeta:
    def test_half_half_is_pi(self):
        assert beta(0.5, 0.5) == pytest.approx(math.pi, rel=1e-14)

    def test_one_b(self):
        for b in (0.3, 1.0, 2.5, 7.0):
            assert beta(1.0, b) == pytest.approx(1.0 / b, rel=1e-14)

    def test_against_quadrature_oracle(self):
        assert beta(0.5, 2.0 / 3.0) == pytest.approx(BETA_HALF_TWOTHIRDS, rel=1e-12)

    def test_quadrature_oracle_live(self):
        value, err = integrate.quad(lambda t: 1.0, 0.0, 1.0, weight="alg",
                                    wvar=(-0.5, -1.0 / 3.0), epsabs=1e-14, epsrel=1e-13)
        assert err < 1e-12
        assert beta(0.5, 2.0 / 3.0) == pytest.approx(value, rel=1e-12)

    def test_domain(self):
        with pytest.raises(DomainError):
            beta(0.0, 1.0)
        with pytest.raises(DomainError):
            beta(1.0, -2.0)


class TestIncBeta:
    def test_full_integral(self):
        for a, b in ((0.5, 0.5), (1.5, 0.25), (2.0, 1.0)):
            assert inc_beta(1.0, a, b) == pytest.approx(beta(a, b), rel=1e-13)

    def test_empty_integral(self):
        assert inc_beta(0.0, 0.7, 0.9) == 0.0

    def test_arcsine_identity(self):
        # B(z; 1/2, 1/2) = 2*arcsin(sqrt(z)); at z = 0.25 this is pi/3
        assert inc_beta(0.25, 0.5, 0.5) == pytest.approx(math.pi / 3.0, rel=1e-13)

    def test_against_quadrature(self):
        value, err = integrate.quad(lambda t: t ** (-0.3) * (1 - t) ** (-0.6),
                                    0.0, 0.4, epsabs=1e-14, epsrel=1e-13)
        assert inc_beta(0.4, 0.7, 0.4) == pytest.approx(value, rel=1e-11)

    @given(st.floats(0.01, 0.99), st.floats(0.15, 5.0), st.floats(0.1, 1.0))
    @settings(max_examples=60, deadline=None)
    def test_bounded_by_complete(self, z, a, b):
        assert 0.0 <= inc_beta(z, a, b) <= beta(a, b) * (1 + 1e-12)

    def test_domain(self):
        with pytest.raises(DomainError):
            inc_beta(1.5, 0.5, 0.5)
        with pytest.raises(DomainError):
            inc_beta(0.5, -1.0, 0.5)
        with pytest.raises(DomainError):
            inc_beta(0.5, 0.5, 1.5)


class TestGauss2F1:
    def test_at_zero(self):
        res = gauss_2f1(HypArgs(0.3, 1.7, 2.2, 0.0))
        assert res.value == 1.0
        assert res.err_estimate == 0.0

    def test_log_closed_form(self):
        # F(1,1;2;z) = -log(1-z)/z
        res = gauss_2f1(HypArgs(1.0, 1.0, 2.0, 0.5))
        assert res.value == pytest.approx(2.0 * math.log(2.0), rel=1e-14)

    def test_agm_anchor(self):
        # (2/pi)*K(0.8) frozen from the AGM oracle
        res = gauss_2f1(HypArgs(0.5, 0.5, 1.0, 0.64))
        assert res.value == pytest.approx(1.2702492001213228, rel=1e-13)
        assert res.value == pytest.approx(2.0 / math.pi * legendre_K_agm(0.8), rel=1e-13)

    def test_err_estimate_is_bound(self):
        res = gauss_2f1(HypArgs(0.5, 0.5, 1.0, 0.64))
        exact = 2.0 / math.pi * legendre_K_agm(0.8)
        assert abs(res.value - exact) <= res.err_estimate + 1e-14 * abs(exact)

    def test_divergence_at_one(self):
        with pytest.raises(DivergenceError):
            gauss_2f1(HypArgs(0.5, 0.5, 1.0, 1.0))

    def test_z_domain(self):
        with pytest.raises(DomainError):
            HypArgs(0.5, 0.5, 1.0, -0.1)
        with pytest.raises(DomainError):
            HypArgs(0.5, 0.5, 1.0, 1.1)

    def test_c_pole(self):
        with pytest.raises(DomainError):
            HypArgs(0.5, 0.5, -1.0, 0.5)

    def test_max_terms_env_override(self, monkeypatch):
        args = HypArgs(0.5, 0.5, 1.0, 0.64)
        full = gauss_2f1(args)
        monkeypatch.setenv("PQELLIPTIC_MAX_TERMS", "5")
        capped = gauss_2f1(args)
        assert capped.err_estimate > full.err_estimate
        assert abs(capped.value - full.value) <= capped.err_estimate
        monkeypatch.setenv("PQELLIPTIC_MAX_TERMS", "not-a-number")
        with pytest.raises(DomainError):
            gauss_2f1(args)

    def test_quadrature_route_above_switch(self):
        res = gauss_2f1(HypArgs(0.5, 0.5, 1.0, 0.95))
        assert res.method == "euler_quadrature"
        exact = 2.0 / math.pi * legendre_K_agm(math.sqrt(0.95))
        assert res.value == pytest.approx(exact, rel=1e-11)


class TestGaussValueAtOne:
    def test_gamma_ratio(self):
        assert gauss_value_at_one(0.5, 0.5, 2.0) == pytest.approx(4.0 / math.pi, rel=1e-14)

    def test_vanishing_parameter(self):
        assert gauss_value_at_one(0.0, 3.7, 1.2) == 1.0

    def test_kernel_endpoint_ingredient(self):
        # (1/q, 1-1/p, 2+1/q-1/p) at p=q=2 gives the same 4/pi ratio
        assert gauss_value_at_one(0.5, 0.5, 2.0) == pytest.approx(4.0 / math.pi, rel=1e-14)

    def test_divergent(self):
        with pytest.raises(DivergenceError):
            gauss_value_at_one(1.0, 1.0, 1.5)


class TestDerivative:
    def test_at_zero(self):
        assert f21_derivative(HypArgs(0.7, 1.3, 2.1, 0.0)) == pytest.approx(
            0.7 * 1.3 / 2.1, rel=1e-14)

    def test_fd_oracle_log_case(self):
        # frozen central difference of F(1,1;2;.) at 0.5, step 1e-5
        assert f21_derivative(HypArgs(1.0, 1.0, 2.0, 0.5)) == pytest.approx(
            1.227411277959778, abs=1e-8)

    def test_fd_oracle_elliptic_case(self):
        assert f21_derivative(HypArgs(0.5, 0.5, 1.0, 0.25)) == pytest.approx(
            0.34487720618203704, abs=1e-8)

    def test_fd_parameter_grid(self):
        # 5x5x5 parameter grid, three arguments each
        h = 1e-5
        values = [0.25, 0.75, 1.25, 1.75, 2.25]
        for a in values:
            for b in values:
                for c_shift in values:
                    c = max(a, b) + c_shift
                    for z in (0.1, 0.5, 0.9):
                        analytic = f21_derivative(HypArgs(a, b, c, z))
                        up = gauss_2f1(HypArgs(a, b, c, z + h)).value
                        down = gauss_2f1(HypArgs(a, b, c, z - h)).value
                        fd = (up - down) / (2.0 * h)
                        assert analytic == pytest.approx(fd, rel=1e-7, abs=1e-9)

    def test_rejects_z_one(self):
        with pytest.raises(DomainError):
            f21_derivative(HypArgs(0.5, 0.5, 3.0, 1.0))


class TestContiguousResidual:
    def test_vanishes_at_zero_up_to_rounding(self):
        # every series is exactly 1 at z = 0, so only coefficient rounding remains
        assert abs(contiguous_residual(2.3, 0.7, 1.1, 0.0)) < 1e-15

    def test_proof_instantiation(self):
        p = q = 2.0
        sigma = 3.0 + 1.0 / q - 1.0 / p
        alpha = 1.0 + 1.0 / q
        rho = 2.0 - 1.0 / p
        z = 1.0 - 0.5 ** p
        assert abs(contiguous_residual(sigma, alpha, rho, z)) < 1e-11

    @given(st.floats(1.0, 5.0), st.floats(0.0, 3.0), st.floats(0.0, 3.0),
           st.floats(0.0, 0.9))
    @settings(max_examples=100, deadline=None)
    def test_identity_sweep(self, sigma, alpha, rho, z):
        assert abs(contiguous_residual(sigma, alpha, rho, z)) < 1e-10


class TestSeriesIntegralAgreement:
    @given(st.floats(0.05, 3.0), st.floats(0.05, 3.0), st.floats(0.05, 3.0),
           st.floats(0.0, 0.95))
    @settings(max_examples=60, deadline=None)
    def test_oracle_coherence(self, a, b, c_shift, z):
        c = b + c_shift
        args = HypArgs(a, b, c, z)
        series = gauss_2f1(args).value
        oracle = euler_integral_oracle(args).value
        assert abs(series - oracle) < 1e-9 * (1.0 + abs(series))


class TestBoundaryConsistency:
    def test_monotone_approach_to_closed_form(self):
        # parameter family with c - a - b = 1, well above the 0.2 guard
        for p, q in ((1.5, 2.0), (2.0, 3.0), (4.0, 1.5)):
            a, b, c = 1.0 / q, 1.0 - 1.0 / p, 2.0 + 1.0 / q - 1.0 / p
            limit = gauss_value_at_one(a, b, c)
            diffs = [abs(gauss_2f1(HypArgs(a, b, c, z)).value - limit)
                     for z in (1 - 1e-3, 1 - 1e-4, 1 - 1e-5, 1 - 1e-6)]
            assert diffs[-1] < 1e-4
            assert all(diffs[i] > diffs[i + 1] for i in range(len(diffs) - 1))


class TestLegendreTransformationAnchor:
    def test_quadratic_transformation(self):
        for r in (0.1, 0.3, 0.5, 0.7, 0.9):
            lhs = math.pi / 2.0 * gauss_2f1(HypArgs(0.5, 0.5, 1.0, r * r)).value
            assert abs(lhs - legendre_K_agm(r)) < 1e-12
