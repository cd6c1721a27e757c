"""
Criterion curves extracted from a finished sweep.

The new criterion uses the per-run running maximum M(alpha, T). The old one
evaluates q(alpha, t_j) on a shared time grid, interpolating each run's series
linearly in t where its sample times do not hit t_j.
"""

from __future__ import annotations

import logging
from typing import List, Optional, Sequence

import numpy as np
import pandas as pd

from ..errors import FitError
from .fitting import fit_power_law
from .models import (
    CurvePoint,
    FitResult,
    OldCriterionCurve,
    SweepResult,
    TimeSlice,
)

logger = logging.getLogger(__name__)


def new_criterion_curve(sweep: SweepResult) -> List[CurvePoint]:
    """(alpha, M(alpha, T)) for every VALID run, alpha descending."""
    points = [CurvePoint(alpha=r.alpha, value=r.M) for r in sweep.runs if r.is_valid]
    return sorted(points, key=lambda p: -p.alpha)


def interpolate_q(series: pd.DataFrame, t: float) -> Optional[float]:
    """q at time t by linear interpolation, or None if t is outside the series.

    The result is clamped to the two bracketing samples so interpolation can
    never exceed the values it interpolates.
    """
    times = series["t"].to_numpy(dtype=np.float64)
    values = series["q"].to_numpy(dtype=np.float64)
    if times.size == 0 or t < times[0] or t > times[-1]:
        return None
    j = int(np.searchsorted(times, t, side="left"))
    if times[j] == t:
        return float(values[j])
    lo, hi = sorted((float(values[j - 1]), float(values[j])))
    value = float(np.interp(t, times, values))
    return min(max(value, lo), hi)


def fit_or_none(points: Sequence[CurvePoint]) -> Optional[FitResult]:
    """Fit a curve, or None when it has too few points or is degenerate."""
    try:
        return fit_power_law([(p.alpha, p.value) for p in points])
    except FitError as e:
        logger.info(f"Curve not fitted: {e}")
        return None


def old_criterion_curve(
    sweep: SweepResult, time_grid: Sequence[float]
) -> OldCriterionCurve:
    """q(alpha, t_j) per grid time, each fitted, plus the aggregate fit.

    Runs whose series do not cover t_j are left out of that slice with a
    warning.
    """
    slices: List[TimeSlice] = []
    for t in time_grid:
        points: List[CurvePoint] = []
        excluded: List[float] = []
        for summary, series in sweep.valid_runs():
            q = interpolate_q(series, t)
            if q is None:
                logger.warning(
                    f"Run alpha={summary.alpha!r} does not cover t={t!r}; "
                    "excluded at this time"
                )
                excluded.append(summary.alpha)
                continue
            points.append(CurvePoint(alpha=summary.alpha, value=q))
        points.sort(key=lambda p: -p.alpha)
        slices.append(
            TimeSlice(t=t, points=points, fit=fit_or_none(points), excluded_alphas=excluded)
        )

    curve = OldCriterionCurve(slices=slices)
    fitted = [s for s in slices if s.fit is not None]
    if fitted:
        best = max(fitted, key=lambda s: s.fit.limit_estimate)  # type: ignore[union-attr]
        curve.aggregate_time = best.t
        curve.aggregate_fit = best.fit
    return curve
