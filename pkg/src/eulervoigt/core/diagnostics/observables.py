"""
Norm-based observables of a velocity state.

All quantities are Parseval sums over the full spectrum, reduced with the
deterministic pairwise tree in :func:`eulervoigt.core.spectral.tree_sum`.
"""

from __future__ import annotations

import logging

import numpy as np
import numpy.typing as npt

from ..dynamics import VoigtParams
from ..spectral import (
    Grid,
    SpectralVectorField,
    curl,
    grad_l2_norm,
    l2_norm,
    tree_sum,
)
from .models import TimeSeriesRecord

logger = logging.getLogger(__name__)

IDENTITY_EPSILON = 1e-300


def energy(u: SpectralVectorField) -> float:
    """||u||^2."""
    return tree_sum(np.abs(u) ** 2)


def enstrophy(u: SpectralVectorField, grid: Grid) -> float:
    """||grad u||^2, which equals ||curl u||^2 when u is solenoidal."""
    return tree_sum(grid.derivative_k_squared * np.abs(u) ** 2)


def alpha_energy(u: SpectralVectorField, params: VoigtParams) -> float:
    """sum_k (1 + alpha^2 |k|^2) |u(k)|^2, conserved by Euler-Voigt."""
    factor = 1.0 + params.alpha**2 * params.grid.derivative_k_squared
    return tree_sum(factor * np.abs(u) ** 2)


def q_value(u: SpectralVectorField, params: VoigtParams) -> float:
    """Criterion integrand alpha * ||grad u||."""
    return params.alpha * grad_l2_norm(u, params.grid)


def identity_residual(u: SpectralVectorField, grid: Grid) -> float:
    """Relative mismatch between ||grad u|| and ||curl u||.

    Zero up to roundoff for solenoidal, mean-free, band-limited u; equal to 1
    for a pure gradient field, whose curl vanishes.
    """
    grad_norm = grad_l2_norm(u, grid)
    curl_norm = l2_norm(curl(u, grid))
    return abs(grad_norm - curl_norm) / max(grad_norm, IDENTITY_EPSILON)


def energy_spectrum(u: SpectralVectorField, grid: Grid) -> npt.NDArray[np.float64]:
    """Shell-summed energy E(kappa) for integer shells kappa = 0, 1, ...

    Each mode goes to the nearest integer shell of |m|. The shell count covers
    the grid corners, so sum(E) = ||u||^2 exactly as a partition.
    """
    density = np.abs(u) ** 2
    if density.ndim == 4:
        density = density.sum(axis=0)
    shells = np.rint(grid.mode_magnitude).astype(np.int64)
    return np.bincount(
        shells.ravel(), weights=density.ravel(), minlength=int(shells.max()) + 1
    )


def tail_fraction(spectrum: npt.NDArray[np.float64], grid: Grid) -> float:
    """Energy fraction in shells above n/3, the resolution health indicator.

    n/3 is two thirds of the Nyquist shell n/2, so this is the top third of the
    shells up to Nyquist together with the corner shells beyond it.
    """
    total = float(np.sum(spectrum))
    if total == 0.0:
        return 0.0
    kappa = np.arange(spectrum.size)
    return float(np.sum(spectrum[kappa > grid.n / 3.0])) / total


def sample_record(
    u: SpectralVectorField, params: VoigtParams, t: float, dt: float
) -> TimeSeriesRecord:
    """Evaluate every time-series diagnostic of a state."""
    e = energy(u)
    z = enstrophy(u, params.grid)
    return TimeSeriesRecord(
        t=t,
        energy=e,
        enstrophy=z,
        alpha_energy=alpha_energy(u, params),
        q=params.alpha * float(np.sqrt(z)),
        dt=dt,
    )
