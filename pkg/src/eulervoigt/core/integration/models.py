"""
Integration models: configuration, mutable run state, and run summaries.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional

from pydantic import BaseModel, Field, model_validator

from .._compat import StrEnum
from ..spectral import SpectralVectorField


class RunStatus(StrEnum):
    """Validity of a finished run."""

    VALID = "VALID"
    INVALID = "INVALID"
    DIVERGED = "DIVERGED"


class IntegratorConfig(BaseModel):
    """Configuration for one time integration."""

    dt: Optional[float] = Field(
        default=1e-3, gt=0.0, description="Fixed time step (ignored when adaptive)"
    )
    adaptive: bool = Field(default=False, description="Use CFL-adaptive steps")
    cfl: float = Field(default=0.5, gt=0.0, le=1.0, description="CFL number")
    dt_max: float = Field(default=1e-2, gt=0.0, description="Adaptive step cap")
    t_final: float = Field(default=1.0, gt=0.0, description="Common final time T")
    sample_stride: int = Field(
        default=10, ge=1, description="Accepted steps between written samples"
    )
    drift_abort_tol: float = Field(
        default=1e-6, gt=0.0, description="Relative alpha-energy drift abort level"
    )
    tail_threshold: float = Field(
        default=1e-6, gt=0.0, description="Spectrum tail fraction deemed resolved"
    )

    @model_validator(mode="after")
    def check_step_control(self) -> "IntegratorConfig":
        if not self.adaptive and self.dt is None:
            raise ValueError("Either dt or adaptive stepping must be configured")
        return self


@dataclass
class RunState:
    """State owned by a single integration.

    Attributes:
        u: Velocity coefficients
        t: Current time
        step_count: Accepted steps so far
        running_max_q: Largest q observed, monotone over a run
        t_argmax: Time at which running_max_q was observed
        alpha_energy0: Conservation reference E_alpha(0)
        energy0: ||u0||^2
        max_drift: Largest relative alpha-energy drift observed
        max_energy_drift: Largest relative drift of ||u||^2 observed
    """

    u: SpectralVectorField
    t: float = 0.0
    step_count: int = 0
    running_max_q: float = 0.0
    t_argmax: float = 0.0
    alpha_energy0: float = 0.0
    energy0: float = 0.0
    max_drift: float = 0.0
    max_energy_drift: float = 0.0

    def observe(self, q: float, alpha_energy: float, energy: float) -> float:
        """Fold one evaluation into the running max and drift trackers.

        Returns:
            The relative alpha-energy drift of this evaluation
        """
        if q > self.running_max_q:
            self.running_max_q = q
            self.t_argmax = self.t
        drift = _relative(alpha_energy, self.alpha_energy0)
        self.max_drift = max(self.max_drift, drift)
        self.max_energy_drift = max(
            self.max_energy_drift, _relative(energy, self.energy0)
        )
        return drift


def _relative(value: float, reference: float) -> float:
    if reference == 0.0:
        return 0.0 if value == 0.0 else math.inf
    return abs(value - reference) / reference


class RunSummary(BaseModel):
    """Outputs of one (alpha, T) integration."""

    alpha: float = Field(ge=0.0)
    n: int
    t_final: float
    t_reached: float
    M: float = Field(description="sup over the run of q = alpha*||grad u||")
    t_argmax: float
    q_final: float
    drift: float = Field(description="max_t |E_a(t) - E_a(0)| / E_a(0)")
    energy_drift: float = Field(description="max_t | ||u||^2 - ||u0||^2 | / ||u0||^2")
    alpha_energy0: float
    steps: int
    status: RunStatus
    status_reason: Optional[str] = None
    tail_fraction: float
    resolved: bool
    series_path: Optional[str] = None

    @property
    def is_valid(self) -> bool:
        return self.status == RunStatus.VALID


@dataclass
class RunOutcome:
    """A summary together with the final state it describes."""

    summary: RunSummary
    state: RunState
