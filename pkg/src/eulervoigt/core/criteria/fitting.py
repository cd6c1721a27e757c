"""
Power-law regression in log-log space.
"""

from __future__ import annotations

import logging
import math
from typing import Sequence, Tuple

import numpy as np

from ..errors import FitError
from .models import FitResult

logger = logging.getLogger(__name__)

#: Residual and total sums below this are treated as an exact fit.
EXACT_FIT_TOL = 1e-24


def fit_power_law(points: Sequence[Tuple[float, float]]) -> FitResult:
    """Fit y ~ c * alpha^beta by ordinary least squares on (log alpha, log y).

    Args:
        points: (alpha, y) pairs with alpha > 0 and y >= 0

    Returns:
        FitResult; if any y is zero the curve cannot be fitted in log space and
        is reported as the trivially vanishing fit

    Raises:
        FitError: With fewer than three points, a non-positive alpha, a
            negative or non-finite value, or all alphas equal
    """
    if len(points) < 3:
        raise FitError(f"Power-law fit needs at least 3 points, got {len(points)}")
    alphas = np.array([p[0] for p in points], dtype=np.float64)
    values = np.array([p[1] for p in points], dtype=np.float64)
    if not np.all(np.isfinite(alphas)) or np.any(alphas <= 0.0):
        raise FitError("Power-law fit needs finite positive alphas")
    if not np.all(np.isfinite(values)) or np.any(values < 0.0):
        raise FitError("Power-law fit needs finite non-negative values")
    if np.all(alphas == alphas[0]):
        raise FitError("Power-law fit needs at least two distinct alphas")

    alpha_min = float(alphas.min())
    alpha_max = float(alphas.max())

    if np.any(values == 0.0):
        if np.any(values > 0.0):
            logger.warning(
                "Curve mixes zero and positive values; reporting it as vanishing"
            )
        return FitResult(
            c=0.0,
            beta=math.inf,
            r2=1.0,
            n_points=len(points),
            alpha_min=alpha_min,
            alpha_max=alpha_max,
        )

    x = np.log(alphas)
    y = np.log(values)
    beta, log_c = np.polyfit(x, y, 1)
    residual = y - (log_c + beta * x)
    ss_res = float(np.sum(residual**2))
    ss_tot = float(np.sum((y - y.mean()) ** 2))
    if ss_tot <= EXACT_FIT_TOL:
        r2 = 1.0 if ss_res <= EXACT_FIT_TOL else 0.0
    else:
        r2 = min(1.0, max(0.0, 1.0 - ss_res / ss_tot))

    result = FitResult(
        c=float(math.exp(log_c)),
        beta=float(beta),
        r2=r2,
        n_points=len(points),
        alpha_min=alpha_min,
        alpha_max=alpha_max,
    )
    logger.debug(f"Fitted c={result.c!r} beta={result.beta!r} r2={result.r2!r}")
    return result
