"""
Initial-condition generation on the unit torus.

The classical flows are written in 2*pi-scaled form, e.g. Taylor-Green
``u = (sin 2pi x1 cos 2pi x2 cos 2pi x3, -cos 2pi x1 sin 2pi x2 cos 2pi x3, 0)``,
and are assembled directly from their Fourier coefficients so the spectrum is
exactly Hermitian and free of transform roundoff. Every generated field is
mean-zeroed, Leray-projected and dealiased, then checked.
"""

from __future__ import annotations

import logging

import numpy as np
import numpy.typing as npt
from pydantic import BaseModel, ConfigDict, Field

from ..core._compat import StrEnum
from ..core.errors import BandLimitError, FieldValidationError
from ..core.spectral import (
    Grid,
    SpectralVectorField,
    dealias,
    forward_transform,
    is_solenoidal,
    l2_norm,
    leray_project,
)

logger = logging.getLogger(__name__)


class InitialConditionKind(StrEnum):
    TAYLOR_GREEN = "taylor-green"
    ABC = "abc"
    SHEAR = "shear"
    RANDOM_SOLENOIDAL = "random-solenoidal"


class InitialConditionSpec(BaseModel):
    """Which initial velocity to build and its parameters."""

    model_config = ConfigDict(extra="forbid")

    kind: InitialConditionKind = Field(default=InitialConditionKind.TAYLOR_GREEN)
    A: float = Field(default=1.0, description="ABC amplitude A")
    B: float = Field(default=1.0, description="ABC amplitude B")
    C: float = Field(default=1.0, description="ABC amplitude C")
    modes: int = Field(
        default=1, ge=1, description="Shear profile: phi = sum_j sin(2 pi j x3) / j"
    )
    k0: float = Field(default=2.0, gt=0.0, description="Random field peak wavenumber")
    seed: int = Field(default=0, ge=0, description="Random field seed")


def _fourier_1d(n: int, kind: str, j: int = 1) -> npt.NDArray[np.complex128]:
    """1D coefficients of sin(2 pi j x), cos(2 pi j x) or the constant 1."""
    coeffs = np.zeros(n, dtype=np.complex128)
    if kind == "sin":
        coeffs[j] = -0.5j
        coeffs[-j] = 0.5j
    elif kind == "cos":
        coeffs[j] = 0.5
        coeffs[-j] = 0.5
    else:
        coeffs[0] = 1.0
    return coeffs


def _separable(
    grid: Grid, x1: str, x2: str, x3: str, j: int = 1
) -> npt.NDArray[np.complex128]:
    n = grid.n
    return np.einsum(
        "i,j,k->ijk",
        _fourier_1d(n, x1, j),
        _fourier_1d(n, x2, j),
        _fourier_1d(n, x3, j),
    )


def _taylor_green(grid: Grid) -> SpectralVectorField:
    u = np.zeros(grid.vector_shape, dtype=np.complex128)
    u[0] = _separable(grid, "sin", "cos", "cos")
    u[1] = -_separable(grid, "cos", "sin", "cos")
    return u


def _abc(spec: InitialConditionSpec, grid: Grid) -> SpectralVectorField:
    A, B, C = spec.A, spec.B, spec.C
    u = np.zeros(grid.vector_shape, dtype=np.complex128)
    u[0] = A * _separable(grid, "one", "one", "sin") + C * _separable(
        grid, "one", "cos", "one"
    )
    u[1] = B * _separable(grid, "sin", "one", "one") + A * _separable(
        grid, "one", "one", "cos"
    )
    u[2] = C * _separable(grid, "one", "sin", "one") + B * _separable(
        grid, "cos", "one", "one"
    )
    return u


def _shear(spec: InitialConditionSpec, grid: Grid) -> SpectralVectorField:
    if spec.modes > grid.dealias_cutoff:
        raise BandLimitError(
            f"Shear profile with {spec.modes} modes exceeds band limit "
            f"n/3={grid.dealias_cutoff:.2f}"
        )
    u = np.zeros(grid.vector_shape, dtype=np.complex128)
    for j in range(1, spec.modes + 1):
        u[0] += _separable(grid, "one", "one", "sin", j) / j
    return u


def _random_solenoidal(spec: InitialConditionSpec, grid: Grid) -> SpectralVectorField:
    """Gaussian modes shaped so that E(kappa) ~ kappa^4 exp(-2 kappa^2 / k0^2)."""
    if spec.k0 > grid.dealias_cutoff:
        raise BandLimitError(
            f"Peak wavenumber k0={spec.k0} exceeds band limit "
            f"n/3={grid.dealias_cutoff:.2f}"
        )
    rng = np.random.default_rng(spec.seed)
    noise = rng.standard_normal(grid.vector_shape) + 1j * rng.standard_normal(
        grid.vector_shape
    )
    m = grid.mode_magnitude
    amplitude = m * np.exp(-(m**2) / spec.k0**2)
    shaped = noise * amplitude
    # The real part of the synthesized field carries a Hermitian spectrum.
    samples = np.fft.ifftn(shaped, axes=(-3, -2, -1), norm="forward").real
    u = leray_project(dealias(forward_transform(samples, grid), grid), grid)
    norm = l2_norm(u)
    if norm == 0.0:
        raise FieldValidationError("Random initial condition has zero energy")
    return u / norm


def generate_ic(spec: InitialConditionSpec, grid: Grid) -> SpectralVectorField:
    """Build a mean-free, divergence-free, dealiased initial velocity.

    Args:
        spec: Initial-condition description
        grid: Collocation grid

    Returns:
        Velocity coefficients

    Raises:
        BandLimitError: If the requested content exceeds |m_i| <= n/3
        FieldValidationError: If the result fails the divergence or mean checks
    """
    if spec.kind == InitialConditionKind.TAYLOR_GREEN:
        raw = _taylor_green(grid)
    elif spec.kind == InitialConditionKind.ABC:
        raw = _abc(spec, grid)
    elif spec.kind == InitialConditionKind.SHEAR:
        raw = _shear(spec, grid)
    else:
        raw = _random_solenoidal(spec, grid)

    u = dealias(leray_project(raw, grid), grid)
    if not is_solenoidal(u, grid):
        raise FieldValidationError(f"Generated {spec.kind.value} field is not solenoidal")
    if np.any(u[:, 0, 0, 0] != 0.0):
        raise FieldValidationError(f"Generated {spec.kind.value} field has a mean")

    logger.info(
        f"Generated {spec.kind.value} initial condition at n={grid.n}, "
        f"energy={l2_norm(u) ** 2!r}"
    )
    return u
