"""
Models for the criterion harness: sweep configuration, fits, curves, verdicts.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import List, Optional, Tuple

import numpy as np
import pandas as pd
from pydantic import BaseModel, ConfigDict, Field, field_serializer, field_validator

from ...io.initial_conditions import InitialConditionSpec
from .._compat import StrEnum
from ..integration import IntegratorConfig, RunSummary


class CriterionEvidence(StrEnum):
    """How a fitted curve behaves as alpha -> 0."""

    VANISHES = "VANISHES"
    PERSISTS = "PERSISTS"
    INCONCLUSIVE = "INCONCLUSIVE"


class Thresholds(BaseModel):
    """Classification thresholds for fitted power laws."""

    model_config = ConfigDict(extra="forbid")

    beta_threshold: float = Field(
        default=0.1, ge=0.0, description="beta at or below this reads as PERSISTS"
    )
    slack: float = Field(
        default=0.1, ge=0.0, lt=1.0, description="beta >= 1 - slack reads as VANISHES"
    )
    r2_threshold: float = Field(
        default=0.98, ge=0.0, le=1.0, description="Minimum fit quality to decide"
    )


class SweepConfig(BaseModel):
    """A family of runs sharing one initial condition, grid and time horizon."""

    alphas: List[float] = Field(
        min_length=3, description="Strictly decreasing positive alpha values"
    )
    n: int = Field(default=32, ge=8)
    initial_condition: InitialConditionSpec = Field(default_factory=InitialConditionSpec)
    integrator: IntegratorConfig = Field(default_factory=IntegratorConfig)
    thresholds: Thresholds = Field(default_factory=Thresholds)
    time_grid_points: int = Field(
        default=11, ge=1, description="Points of the old-criterion grid linspace(0, T)"
    )

    @field_validator("alphas")
    @classmethod
    def check_alphas(cls, alphas: List[float]) -> List[float]:
        if any(not (a > 0.0 and math.isfinite(a)) for a in alphas):
            raise ValueError("Sweep alphas must be finite and positive")
        if any(b >= a for a, b in zip(alphas, alphas[1:])):
            raise ValueError("Sweep alphas must be strictly decreasing")
        return alphas

    @field_validator("n")
    @classmethod
    def check_n(cls, n: int) -> int:
        if n % 2 != 0:
            raise ValueError(f"Grid size must be even, got {n}")
        return n

    @property
    def t_final(self) -> float:
        return self.integrator.t_final

    def time_grid(self) -> List[float]:
        """Old-criterion evaluation times, ending exactly at T."""
        if self.time_grid_points == 1:
            return [self.t_final]
        times = np.linspace(0.0, self.t_final, self.time_grid_points)
        times[-1] = self.t_final
        return [float(t) for t in times]


@dataclass
class SweepResult:
    """Per-run summaries and sampled series, ordered by alpha descending."""

    config: SweepConfig
    runs: List[RunSummary]
    series: List[pd.DataFrame] = field(default_factory=list)

    def valid_runs(self) -> List[Tuple[RunSummary, pd.DataFrame]]:
        return [(r, s) for r, s in zip(self.runs, self.series) if r.is_valid]


class FitResult(BaseModel):
    """Least-squares fit of log y = log c + beta log alpha.

    A curve that is identically zero is reported with ``beta = inf`` (it
    vanishes faster than any power) and ``r2 = 1``.
    """

    c: float
    beta: float
    r2: float = Field(ge=0.0, le=1.0)
    n_points: int
    alpha_min: float
    alpha_max: float

    @field_serializer("beta")
    def serialize_beta(self, beta: float) -> Optional[float]:
        return None if math.isinf(beta) else beta

    @field_validator("beta", mode="before")
    @classmethod
    def parse_beta(cls, beta: Optional[float]) -> float:
        return math.inf if beta is None else beta

    @property
    def is_trivial(self) -> bool:
        return math.isinf(self.beta)

    def predict(self, alpha: float) -> float:
        if self.is_trivial:
            return 0.0
        return self.c * alpha**self.beta

    @property
    def limit_estimate(self) -> float:
        """Fitted value at the smallest alpha in the sweep."""
        return self.predict(self.alpha_min)


class CurvePoint(BaseModel):
    alpha: float
    value: float


class TimeSlice(BaseModel):
    """Old-criterion curve q(alpha, t_j) at one time with its fit."""

    t: float
    points: List[CurvePoint]
    fit: Optional[FitResult] = None
    excluded_alphas: List[float] = Field(default_factory=list)


class OldCriterionCurve(BaseModel):
    """q(alpha, t_j) over a time grid, with the aggregate fit used for the verdict.

    The aggregate is the per-time fit with the largest limit estimate, i.e.
    the time at which the criterion is closest to persisting.
    """

    slices: List[TimeSlice]
    aggregate_time: Optional[float] = None
    aggregate_fit: Optional[FitResult] = None

    @property
    def times(self) -> List[float]:
        return [s.t for s in self.slices]


class CriterionVerdict(BaseModel):
    new_criterion_evidence: CriterionEvidence
    old_criterion_evidence: CriterionEvidence
    fit_new: Optional[FitResult] = None
    fit_old: Optional[FitResult] = None
    thresholds: Thresholds


class OrderingViolation(BaseModel):
    alpha: float
    t: float
    q: float
    M: float


class ComparisonReport(BaseModel):
    """Pointwise check M(alpha, T) >= q(alpha, t_j) and the fitted limits."""

    n_checks: int
    n_equal: int = Field(description="Checks where M equals q exactly")
    violations: List[OrderingViolation] = Field(default_factory=list)
    new_limit_estimate: Optional[float] = None
    old_limit_estimate: Optional[float] = None

    @property
    def passed(self) -> bool:
        return not self.violations


class SweepAnalysis(BaseModel):
    """Everything derived from a sweep's summaries and series."""

    new_curve: List[CurvePoint]
    fit_new: Optional[FitResult] = None
    old_curve: OldCriterionCurve
    comparison: ComparisonReport
    verdict: CriterionVerdict
    n_valid: int
    n_total: int


class ConvergenceRow(BaseModel):
    alpha: float
    status: str
    error: Optional[float] = Field(default=None, description="||u^a(T) - u^0(T)||")
    error_over_alpha: Optional[float] = None
    ratio: Optional[float] = Field(
        default=None, description="error at the previous alpha divided by this one"
    )
    relative_error: Optional[float] = Field(
        default=None, description="error divided by ||u^0(T)||"
    )
    norm_gap: Optional[float] = Field(
        default=None,
        description="| ||u^a(T)|| - ||u0|| | / ||u0||, a lower bound on error / ||u0||",
    )


class ConvergenceTable(BaseModel):
    """Errors of Voigt runs against an Euler reference at one horizon."""

    n: int
    t_final: float
    dt: float
    reference_status: str
    reference_reason: Optional[str] = None
    reference_tail_fraction: float
    reference_norm: Optional[float] = Field(default=None, description="||u^0(T)||")
    rows: List[ConvergenceRow] = Field(default_factory=list)
    order_fit: Optional[FitResult] = None

    @property
    def is_valid(self) -> bool:
        return self.reference_status == "VALID"
