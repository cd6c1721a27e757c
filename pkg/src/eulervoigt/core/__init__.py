"""
Core solver and harness.

Subpackages are layered bottom-up: spectral operators, Euler-Voigt dynamics,
diagnostics, time integration, the criterion harness and property suites.
"""

from .criteria import (
    CriterionEvidence,
    CriterionVerdict,
    FitResult,
    SweepConfig,
    SweepResult,
    SweepRunner,
    Thresholds,
    analyze_sweep,
    classify,
    compare_criteria,
    convergence_study,
    fit_power_law,
    new_criterion_curve,
    old_criterion_curve,
    run_sweep,
)
from .diagnostics import (
    TimeSeriesRecord,
    alpha_energy,
    energy,
    energy_spectrum,
    enstrophy,
    identity_residual,
    q_value,
    tail_fraction,
)
from .dynamics import VoigtParams, nonlinear_term, pressure_field, voigt_rhs
from .errors import (
    BandLimitError,
    CheckpointError,
    ConfigError,
    ConsistencyError,
    ConservationBreachError,
    FieldValidationError,
    FitError,
    NumericalBlowupError,
    SweepError,
    SymmetryError,
    VoigtError,
)
from .integration import (
    IntegratorConfig,
    RunState,
    RunStatus,
    RunSummary,
    VoigtIntegrator,
    cfl_dt,
    integrate,
    rk4_step,
)
from .spectral import (
    Grid,
    curl,
    dealias,
    divergence,
    forward_transform,
    gradient,
    inverse_transform,
    l2_norm,
    leray_project,
)

__all__ = [
    "BandLimitError",
    "CheckpointError",
    "ConfigError",
    "ConsistencyError",
    "ConservationBreachError",
    "CriterionEvidence",
    "CriterionVerdict",
    "FieldValidationError",
    "FitError",
    "FitResult",
    "Grid",
    "IntegratorConfig",
    "NumericalBlowupError",
    "RunState",
    "RunStatus",
    "RunSummary",
    "SweepConfig",
    "SweepError",
    "SweepResult",
    "SweepRunner",
    "SymmetryError",
    "Thresholds",
    "TimeSeriesRecord",
    "VoigtError",
    "VoigtIntegrator",
    "VoigtParams",
    "alpha_energy",
    "analyze_sweep",
    "cfl_dt",
    "classify",
    "compare_criteria",
    "convergence_study",
    "curl",
    "dealias",
    "divergence",
    "energy",
    "energy_spectrum",
    "enstrophy",
    "fit_power_law",
    "forward_transform",
    "gradient",
    "identity_residual",
    "integrate",
    "inverse_transform",
    "l2_norm",
    "leray_project",
    "new_criterion_curve",
    "nonlinear_term",
    "old_criterion_curve",
    "pressure_field",
    "q_value",
    "rk4_step",
    "run_sweep",
    "tail_fraction",
    "voigt_rhs",
]
