"""
Verdicts on a sweep: classification of fitted curves and the ordering check
between the two criteria.
"""

from __future__ import annotations

import logging
from typing import List, Optional, Sequence

from ..errors import ConsistencyError
from .curves import fit_or_none, interpolate_q, new_criterion_curve, old_criterion_curve
from .models import (
    ComparisonReport,
    CriterionEvidence,
    CriterionVerdict,
    FitResult,
    OrderingViolation,
    SweepAnalysis,
    SweepResult,
    Thresholds,
)

logger = logging.getLogger(__name__)


def classify_fit(fit: Optional[FitResult], thresholds: Thresholds) -> CriterionEvidence:
    """Evidence carried by one fit."""
    if fit is None or fit.r2 < thresholds.r2_threshold:
        return CriterionEvidence.INCONCLUSIVE
    if fit.beta >= 1.0 - thresholds.slack:
        return CriterionEvidence.VANISHES
    if fit.beta <= thresholds.beta_threshold:
        return CriterionEvidence.PERSISTS
    return CriterionEvidence.INCONCLUSIVE


def classify(
    fit_new: Optional[FitResult],
    fit_old: Optional[FitResult],
    thresholds: Optional[Thresholds] = None,
) -> CriterionVerdict:
    """Classify both criteria; the verdict carries the fits it was based on."""
    thresholds = thresholds or Thresholds()
    return CriterionVerdict(
        new_criterion_evidence=classify_fit(fit_new, thresholds),
        old_criterion_evidence=classify_fit(fit_old, thresholds),
        fit_new=fit_new,
        fit_old=fit_old,
        thresholds=thresholds,
    )


def compare_criteria(
    sweep: SweepResult,
    time_grid: Sequence[float],
    fit_new: Optional[FitResult] = None,
    fit_old: Optional[FitResult] = None,
) -> ComparisonReport:
    """Check M(alpha, T) >= q(alpha, t) for every VALID run.

    Both the grid times and every recorded sample are checked, without
    tolerance. Violations are reported, not raised; see
    :func:`analyze_sweep`.
    """
    violations: List[OrderingViolation] = []
    n_checks = 0
    n_equal = 0
    for summary, series in sweep.valid_runs():
        sample_checks = zip(series["t"].tolist(), series["q"].tolist())
        grid_checks = [(t, interpolate_q(series, t)) for t in time_grid]
        for t, q in [*sample_checks, *grid_checks]:
            if q is None:
                continue
            n_checks += 1
            if q == summary.M:
                n_equal += 1
            elif q > summary.M:
                violations.append(
                    OrderingViolation(alpha=summary.alpha, t=t, q=q, M=summary.M)
                )

    report = ComparisonReport(
        n_checks=n_checks,
        n_equal=n_equal,
        violations=violations,
        new_limit_estimate=fit_new.limit_estimate if fit_new else None,
        old_limit_estimate=fit_old.limit_estimate if fit_old else None,
    )
    if violations:
        logger.error(f"{len(violations)} ordering violations of M >= q")
    return report


def analyze_sweep(sweep: SweepResult) -> SweepAnalysis:
    """Curves, fits, ordering report and verdict of a sweep.

    A pure function of the summaries and series, shared by ``sweep`` and
    ``analyze``.

    Raises:
        ConsistencyError: If the ordering check finds a violation
    """
    config = sweep.config
    time_grid = config.time_grid()

    new_curve = new_criterion_curve(sweep)
    fit_new = fit_or_none(new_curve)
    old_curve = old_criterion_curve(sweep, time_grid)
    comparison = compare_criteria(sweep, time_grid, fit_new, old_curve.aggregate_fit)
    if not comparison.passed:
        first = comparison.violations[0]
        raise ConsistencyError(
            f"Running maximum below sampled q: alpha={first.alpha!r} "
            f"t={first.t!r} q={first.q!r} M={first.M!r}"
        )

    verdict = classify(fit_new, old_curve.aggregate_fit, config.thresholds)
    n_valid = len(new_curve)
    logger.info(
        f"Verdict: new={verdict.new_criterion_evidence.value} "
        f"old={verdict.old_criterion_evidence.value} ({n_valid}/{len(sweep.runs)} valid)"
    )
    return SweepAnalysis(
        new_curve=new_curve,
        fit_new=fit_new,
        old_curve=old_curve,
        comparison=comparison,
        verdict=verdict,
        n_valid=n_valid,
        n_total=len(sweep.runs),
    )
