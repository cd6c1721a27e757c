"""
Euler-Voigt right-hand side in spectral form.

The momentum equation
``-alpha^2 d/dt Lap(u) + du/dt + (u.grad)u + grad p = 0`` with ``div u = 0``
becomes, after Leray projection and mode-wise inversion of the Voigt operator,
``du/dt = -w(k) P[(u.grad)u]``.
"""

from __future__ import annotations

import logging
from typing import Optional

import numpy as np

from ..errors import NumericalBlowupError
from ..spectral import (
    Grid,
    SpectralVectorField,
    dealias,
    forward_transform,
    gradient,
    inverse_transform,
    leray_project,
)
from .models import PressureDiagnostic, VoigtParams

logger = logging.getLogger(__name__)


def nonlinear_term(
    u: SpectralVectorField,
    grid: Grid,
    step: Optional[int] = None,
    t: Optional[float] = None,
) -> SpectralVectorField:
    """Dealiased spectral (u.grad)u in convective form.

    u and its nine derivatives d_j u_i are taken to physical space, the
    products sum_j u_j d_j u_i are formed pointwise and transformed back.

    Args:
        u: Divergence-free, mean-free, dealiased velocity coefficients
        grid: Collocation grid
        step: Step number, reported if the product blows up
        t: Time, reported if the product blows up

    Raises:
        NumericalBlowupError: If the physical-space product is non-finite
    """
    velocity = inverse_transform(u, grid, check=False)
    product = np.empty(grid.vector_shape, dtype=np.float64)
    for i in range(3):
        derivatives = inverse_transform(gradient(u[i], grid), grid, check=False)
        product[i] = np.sum(velocity * derivatives, axis=0)

    if not np.isfinite(product).all():
        logger.error(f"Non-finite advection product at step={step}, t={t}")
        raise NumericalBlowupError(
            f"Non-finite (u.grad)u at step {step}, t={t}", step=step, t=t
        )
    return dealias(forward_transform(product, grid), grid)


def voigt_rhs(
    u: SpectralVectorField,
    params: VoigtParams,
    step: Optional[int] = None,
    t: Optional[float] = None,
) -> SpectralVectorField:
    """du/dt = -w(k) * P[(u.grad)u]; alpha = 0 is the incompressible Euler RHS."""
    grid = params.grid
    projected = leray_project(nonlinear_term(u, grid, step=step, t=t), grid)
    return -params.weights * projected


def pressure_field(u: SpectralVectorField, grid: Grid) -> PressureDiagnostic:
    """Pressure from -Lap(p) = div((u.grad)u).

    p(k) = i k.N(k) / |k|^2 for k != 0 and p(0) = 0.
    """
    N = nonlinear_term(u, grid)
    k = grid.derivative_wavevectors
    k2 = grid.derivative_k_squared
    coefficients = 1j * np.sum(k * N, axis=0) / np.where(k2 == 0.0, 1.0, k2)
    coefficients[0, 0, 0] = 0.0
    return PressureDiagnostic(coefficients=coefficients, grid=grid)
