"""
eulervoigt - pseudospectral Euler-Voigt solver and blow-up criterion harness.

The solver integrates the inviscid Voigt regularization of the incompressible
Euler equations on the unit torus; the harness runs alpha-sweeps and decides
whether alpha * ||grad u^alpha|| vanishes or persists as alpha -> 0.
"""

# Version information
__version__ = "0.1.0"

from .core import (
    # Spectral core
    Grid,
    forward_transform,
    inverse_transform,
    leray_project,
    # Dynamics
    VoigtParams,
    voigt_rhs,
    # Integration
    IntegratorConfig,
    RunStatus,
    RunSummary,
    VoigtIntegrator,
    integrate,
    # Diagnostics
    TimeSeriesRecord,
    identity_residual,
    q_value,
    # Criterion harness
    CriterionEvidence,
    CriterionVerdict,
    FitResult,
    SweepConfig,
    SweepResult,
    Thresholds,
    analyze_sweep,
    classify,
    compare_criteria,
    convergence_study,
    fit_power_law,
    new_criterion_curve,
    old_criterion_curve,
    run_sweep,
    # Errors
    VoigtError,
)
from .io import (
    Checkpoint,
    InitialConditionKind,
    InitialConditionSpec,
    generate_ic,
    read_checkpoint,
    write_checkpoint,
)

__all__ = [
    "__version__",
    "Checkpoint",
    "CriterionEvidence",
    "CriterionVerdict",
    "FitResult",
    "Grid",
    "InitialConditionKind",
    "InitialConditionSpec",
    "IntegratorConfig",
    "RunStatus",
    "RunSummary",
    "SweepConfig",
    "SweepResult",
    "Thresholds",
    "TimeSeriesRecord",
    "VoigtError",
    "VoigtIntegrator",
    "VoigtParams",
    "analyze_sweep",
    "classify",
    "compare_criteria",
    "convergence_study",
    "fit_power_law",
    "forward_transform",
    "generate_ic",
    "identity_residual",
    "integrate",
    "inverse_transform",
    "leray_project",
    "new_criterion_curve",
    "old_criterion_curve",
    "q_value",
    "read_checkpoint",
    "run_sweep",
    "voigt_rhs",
    "write_checkpoint",
]
