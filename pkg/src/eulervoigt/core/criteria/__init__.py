"""
Criterion harness: alpha sweeps, criterion curves, power-law fits and verdicts.
"""

from .convergence import convergence_study
from .curves import interpolate_q, new_criterion_curve, old_criterion_curve
from .fitting import fit_power_law
from .models import (
    ComparisonReport,
    ConvergenceRow,
    ConvergenceTable,
    CriterionEvidence,
    CriterionVerdict,
    CurvePoint,
    FitResult,
    OldCriterionCurve,
    OrderingViolation,
    SweepAnalysis,
    SweepConfig,
    SweepResult,
    Thresholds,
    TimeSlice,
)
from .persistence import load_sweep, save_analysis, save_sweep
from .runner import RunJob, RunResult, SweepRunner, execute_run, run_sweep
from .verdict import analyze_sweep, classify, classify_fit, compare_criteria

__all__ = [
    "ComparisonReport",
    "ConvergenceRow",
    "ConvergenceTable",
    "CriterionEvidence",
    "CriterionVerdict",
    "CurvePoint",
    "FitResult",
    "OldCriterionCurve",
    "OrderingViolation",
    "RunJob",
    "RunResult",
    "SweepAnalysis",
    "SweepConfig",
    "SweepResult",
    "SweepRunner",
    "Thresholds",
    "TimeSlice",
    "analyze_sweep",
    "classify",
    "classify_fit",
    "compare_criteria",
    "convergence_study",
    "execute_run",
    "fit_power_law",
    "interpolate_q",
    "load_sweep",
    "new_criterion_curve",
    "old_criterion_curve",
    "run_sweep",
    "save_analysis",
    "save_sweep",
]
