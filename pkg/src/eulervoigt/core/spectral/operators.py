"""
Spectral calculus on the unit torus.

Transforms use the convention
``F(m) = (1/n^3) * sum_x f(x) exp(-i k.x)``, so Parseval reads
``||f||^2 = sum_m |F(m)|^2`` on the unit-volume domain. Every operator accepts a
scalar array ``(n, n, n)`` or a vector array ``(3, n, n, n)`` where it makes
sense, and never mutates its input.
"""

from __future__ import annotations

import logging
from typing import Tuple

import numpy as np
import numpy.typing as npt

from ..errors import FieldValidationError, SymmetryError
from .models import (
    SPATIAL_AXES,
    Grid,
    RealScalarField,
    SpectralScalarField,
    SpectralVectorField,
)

logger = logging.getLogger(__name__)

SYMMETRY_TOLERANCE = 1e-12


def _check_spatial_shape(array: npt.NDArray, grid: Grid) -> None:
    if array.shape[-3:] != grid.shape or array.ndim not in (3, 4):
        raise FieldValidationError(
            f"Field shape {array.shape} does not match grid n={grid.n}"
        )
    if array.ndim == 4 and array.shape[0] != 3:
        raise FieldValidationError(
            f"Vector fields need 3 components, got {array.shape[0]}"
        )


def forward_transform(f: RealScalarField, grid: Grid) -> SpectralScalarField:
    """Transform real samples to Fourier coefficients.

    Args:
        f: Real samples, scalar ``(n, n, n)`` or vector ``(3, n, n, n)``
        grid: Collocation grid

    Returns:
        Complex coefficients in the same layout

    Raises:
        FieldValidationError: If a sample is non-finite or the shape is wrong
    """
    samples = np.asarray(f, dtype=np.float64)
    _check_spatial_shape(samples, grid)
    finite = np.isfinite(samples)
    if not finite.all():
        bad = tuple(int(i) for i in np.argwhere(~finite)[0])
        raise FieldValidationError(f"Non-finite sample at index {bad}", index=bad)
    return np.fft.fftn(samples, axes=SPATIAL_AXES, norm="forward")


def reflect(F: SpectralScalarField, grid: Grid) -> SpectralScalarField:
    """Return G with G(m) = F(-m)."""
    r = grid.reflection_index
    return F[..., r[:, None, None], r[None, :, None], r[None, None, :]]


def hermitian_residual(
    F: SpectralScalarField, grid: Grid
) -> Tuple[float, Tuple[int, ...]]:
    """Largest |F(m) - conj(F(-m))| and the array index where it occurs."""
    residual = np.abs(F - np.conj(reflect(F, grid)))
    flat = int(np.argmax(residual))
    index = tuple(int(i) for i in np.unravel_index(flat, residual.shape))
    return float(residual.flat[flat]), index


def check_hermitian(
    F: SpectralScalarField, grid: Grid, tol: float = SYMMETRY_TOLERANCE
) -> None:
    """Raise SymmetryError if F is not the spectrum of a real field."""
    scale = float(np.max(np.abs(F))) if F.size else 0.0
    if scale == 0.0:
        return
    worst, index = hermitian_residual(F, grid)
    if worst > tol * scale:
        mode = grid.mode_at(index)
        raise SymmetryError(
            f"Hermitian symmetry violated at mode {mode}: residual "
            f"{worst:.3e} exceeds {tol:.1e} relative to max |coeff| {scale:.3e}",
            mode=mode,
        )


def inverse_transform(
    F: SpectralScalarField, grid: Grid, check: bool = True
) -> RealScalarField:
    """Transform Fourier coefficients back to real samples.

    Args:
        F: Hermitian-symmetric coefficients (scalar or vector layout)
        grid: Collocation grid
        check: Verify symmetry and the discarded imaginary residue. The
            solver's inner loop passes False for inputs it built itself.

    Returns:
        Real samples

    Raises:
        SymmetryError: If F is not Hermitian-symmetric within tolerance
    """
    coeffs = np.asarray(F, dtype=np.complex128)
    _check_spatial_shape(coeffs, grid)
    if check:
        check_hermitian(coeffs, grid)
    samples = np.fft.ifftn(coeffs, axes=SPATIAL_AXES, norm="forward")
    if check:
        scale = float(np.max(np.abs(samples)))
        residue = float(np.max(np.abs(samples.imag)))
        if scale > 0.0 and residue > SYMMETRY_TOLERANCE * scale:
            raise SymmetryError(
                f"Imaginary residue {residue:.3e} after inverse transform exceeds "
                f"{SYMMETRY_TOLERANCE:.1e} relative"
            )
    return np.ascontiguousarray(samples.real)


def dealias(F: SpectralScalarField, grid: Grid) -> SpectralScalarField:
    """Zero every mode with max_j |m_j| > n/3 (2/3 rule)."""
    return np.where(grid.dealias_mask, F, 0.0 + 0.0j)


def gradient(F: SpectralScalarField, grid: Grid) -> SpectralVectorField:
    """Spectral gradient: ik F per mode."""
    return 1j * grid.derivative_wavevectors * F[np.newaxis]


def divergence(V: SpectralVectorField, grid: Grid) -> SpectralScalarField:
    """Spectral divergence: i k.V per mode."""
    return 1j * np.sum(grid.derivative_wavevectors * V, axis=0)


def curl(V: SpectralVectorField, grid: Grid) -> SpectralVectorField:
    """Spectral curl: i k x V per mode."""
    k = grid.derivative_wavevectors
    return 1j * np.array(
        [
            k[1] * V[2] - k[2] * V[1],
            k[2] * V[0] - k[0] * V[2],
            k[0] * V[1] - k[1] * V[0],
        ]
    )


def laplacian(F: SpectralScalarField, grid: Grid) -> SpectralScalarField:
    """Spectral Laplacian consistent with divergence(gradient(F))."""
    return -grid.derivative_k_squared * F


def leray_project(V: SpectralVectorField, grid: Grid) -> SpectralVectorField:
    """Project onto mean-free solenoidal fields.

    Per mode k != 0: V <- V - k (k.V) / |k|^2. The zero mode is set to 0.
    """
    k = grid.derivative_wavevectors
    k2 = grid.derivative_k_squared
    k_dot_v = np.sum(k * V, axis=0) / np.where(k2 == 0.0, 1.0, k2)
    projected = V - k * k_dot_v[np.newaxis]
    projected[..., 0, 0, 0] = 0.0
    return projected


def tree_sum(values: npt.ArrayLike) -> float:
    """Sum in a fixed pairwise tree order.

    The array is flattened in C order and zero-padded to a power of two, then
    reduced level by level, so the result depends only on the values.
    """
    flat = np.ascontiguousarray(values, dtype=np.float64).ravel()
    if flat.size == 0:
        return 0.0
    size = 1 << (flat.size - 1).bit_length()
    buf = np.zeros(size, dtype=np.float64)
    buf[: flat.size] = flat
    while buf.size > 1:
        buf = buf[0::2] + buf[1::2]
    return float(buf[0])


def l2_norm(F: SpectralScalarField) -> float:
    """||f||_L2 via Parseval (scalar or vector coefficients)."""
    return float(np.sqrt(tree_sum(np.abs(F) ** 2)))


def grad_l2_norm(V: SpectralVectorField, grid: Grid) -> float:
    """||grad f||_L2 = sqrt(sum |k|^2 |F|^2)."""
    return float(np.sqrt(tree_sum(grid.derivative_k_squared * np.abs(V) ** 2)))


def physical_l2_norm(f: RealScalarField) -> float:
    """Grid quadrature of ||f||_L2 on the unit torus (mean of f^2)."""
    samples = np.asarray(f, dtype=np.float64)
    points = samples.shape[-1] ** 3
    return float(np.sqrt(tree_sum(samples**2) / points))


def is_solenoidal(V: SpectralVectorField, grid: Grid, tol: float = 1e-12) -> bool:
    """Check |k.V(k)| <= tol * ||V|| for all k."""
    scale = l2_norm(V)
    if scale == 0.0:
        return True
    return bool(np.max(np.abs(divergence(V, grid))) <= tol * scale)
