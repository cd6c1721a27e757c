"""Tests for the Euler-Voigt right-hand side and the pressure diagnostic."""

import math

import numpy as np
import pytest

from eulervoigt.core.dynamics import (
    VoigtParams,
    nonlinear_term,
    pressure_field,
    voigt_rhs,
)
from eulervoigt.core.errors import FieldValidationError, NumericalBlowupError
from eulervoigt.core.spectral import (
    forward_transform,
    gradient,
    inverse_transform,
    is_solenoidal,
    l2_norm,
    leray_project,
)


def _power(u, rhs, factor):
    """Re sum factor * conj(u) . rhs, the rate of change of a quadratic invariant."""
    return float(np.real(np.sum(factor * np.conj(u) * rhs)))


class TestVoigtParams:
    @pytest.mark.parametrize("alpha", [-0.1, math.inf, math.nan])
    def test_rejects_invalid_alpha(self, grid8, alpha):
        with pytest.raises(FieldValidationError):
            VoigtParams(alpha, grid8)

    def test_euler_weights_are_one(self, grid8):
        params = VoigtParams(0.0, grid8)
        assert params.is_euler
        assert np.all(params.weights == 1.0)

    def test_weights_invert_voigt_operator(self, grid8):
        params = VoigtParams(0.1, grid8)
        product = params.weights * (1.0 + 0.01 * grid8.derivative_k_squared)
        assert np.allclose(product, 1.0, rtol=1e-14, atol=0.0)
        assert params.weights[0, 0, 0] == 1.0


class TestNonlinearTerm:
    def test_vanishes_on_shear_flow(self, grid16, shear16):
        assert np.all(nonlinear_term(shear16, grid16) == 0.0)
        for alpha in (0.0, 0.1):
            assert np.all(voigt_rhs(shear16, VoigtParams(alpha, grid16)) == 0.0)

    def test_matches_analytic_product(self, grid8):
        x1, x2, x3 = 2.0 * np.pi * grid8.points
        samples = np.array([np.sin(x2), np.sin(x3), np.sin(x1)])
        u = forward_transform(samples, grid8)
        N = inverse_transform(nonlinear_term(u, grid8), grid8)
        expected = 2.0 * np.pi * np.array(
            [
                np.sin(x3) * np.cos(x2),
                np.sin(x1) * np.cos(x3),
                np.sin(x2) * np.cos(x1),
            ]
        )
        assert np.max(np.abs(N - expected)) <= 1e-13

    def test_output_is_dealiased(self, grid16, random_field16):
        N = nonlinear_term(random_field16, grid16)
        assert np.all(N[:, ~grid16.dealias_mask] == 0.0)

    def test_raises_on_overflow(self, grid16, taylor_green16):
        with pytest.raises(NumericalBlowupError):
            nonlinear_term(taylor_green16 * 1e200, grid16, step=3, t=0.5)


class TestVoigtRhs:
    @pytest.mark.parametrize("alpha", [0.0, 0.05, 0.2])
    def test_rhs_is_solenoidal(self, grid16, random_field16, alpha):
        rhs = voigt_rhs(random_field16, VoigtParams(alpha, grid16))
        assert is_solenoidal(rhs, grid16)

    @pytest.mark.parametrize("alpha", [0.0, 0.05, 0.2])
    def test_alpha_energy_is_conserved_by_rhs(self, grid16, random_field16, alpha):
        params = VoigtParams(alpha, grid16)
        rhs = voigt_rhs(random_field16, params)
        factor = 1.0 + alpha**2 * grid16.derivative_k_squared
        scale = l2_norm(random_field16) * l2_norm(nonlinear_term(random_field16, grid16))
        assert abs(_power(random_field16, rhs, factor)) <= 1e-12 * scale

    def test_regularization_damps_high_modes(self, grid16, random_field16):
        euler = voigt_rhs(random_field16, VoigtParams(0.0, grid16))
        voigt = voigt_rhs(random_field16, VoigtParams(0.2, grid16))
        assert np.allclose(voigt, VoigtParams(0.2, grid16).weights * euler, atol=1e-14)


class TestPressure:
    def test_pressure_gradient_balances_non_solenoidal_part(
        self, grid16, random_field16
    ):
        N = nonlinear_term(random_field16, grid16)
        p = pressure_field(random_field16, grid16)
        balance = N - leray_project(N, grid16) + gradient(p.coefficients, grid16)
        assert l2_norm(balance) <= 1e-12 * l2_norm(N)

    def test_pressure_is_real_and_mean_free(self, grid16, taylor_green16):
        p = pressure_field(taylor_green16, grid16)
        assert p.coefficients[0, 0, 0] == 0.0
        samples = p.to_physical()
        assert samples.shape == grid16.shape
        assert abs(float(np.mean(samples))) < 1e-14

    def test_zero_field_has_no_pressure(self, grid8):
        u = np.zeros(grid8.vector_shape, dtype=np.complex128)
        assert np.all(pressure_field(u, grid8).coefficients == 0.0)

    def test_shear_flow_has_no_pressure(self, grid16, shear16):
        assert np.all(pressure_field(shear16, grid16).coefficients == 0.0)
