"""
Explicit time steppers for the Voigt state.
"""

from __future__ import annotations

import dataclasses
import logging
from typing import Optional

import numpy as np

from ..dynamics import VoigtParams, voigt_rhs
from ..errors import NumericalBlowupError
from ..spectral import Grid, SpectralVectorField, inverse_transform, leray_project
from .models import RunState

logger = logging.getLogger(__name__)


def rk4_step(
    state: RunState, dt: float, params: VoigtParams, t_next: Optional[float] = None
) -> RunState:
    """Advance one classical Runge-Kutta step.

    The update is re-projected so roundoff cannot accumulate a divergence or a
    mean. Trackers are carried over unchanged; the caller folds in the new
    diagnostics.

    Args:
        state: Current state
        dt: Step size, > 0
        params: Voigt parameters
        t_next: Exact time to assign after the step (defaults to t + dt)

    Raises:
        NumericalBlowupError: If the updated state is non-finite
    """
    if not dt > 0.0:
        raise ValueError(f"Time step must be positive, got {dt}")

    step = state.step_count + 1
    u = state.u
    k1 = voigt_rhs(u, params, step=step, t=state.t)
    k2 = voigt_rhs(u + 0.5 * dt * k1, params, step=step, t=state.t)
    k3 = voigt_rhs(u + 0.5 * dt * k2, params, step=step, t=state.t)
    k4 = voigt_rhs(u + dt * k3, params, step=step, t=state.t)
    updated = u + (dt / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4)

    if not np.isfinite(updated).all():
        raise NumericalBlowupError(
            f"Non-finite state after step {step} (t={state.t + dt})",
            step=step,
            t=state.t + dt,
        )

    return dataclasses.replace(
        state,
        u=leray_project(updated, params.grid),
        t=state.t + dt if t_next is None else t_next,
        step_count=step,
    )


def cfl_dt(
    u: SpectralVectorField, grid: Grid, cfl: float, dt_max: float
) -> float:
    """CFL-limited step: cfl * dx / max_x |u(x)|, capped at dt_max."""
    velocity = inverse_transform(u, grid, check=False)
    speed = float(np.max(np.sqrt(np.sum(velocity**2, axis=0))))
    if speed == 0.0:
        return dt_max
    return min(cfl * grid.spacing / speed, dt_max)
