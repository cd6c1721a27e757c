"""
Convergence of Euler-Voigt solutions to the Euler solution as alpha -> 0.

The reference is the same scheme run at alpha = 0, so discretization error is
common to every run and the tabulated differences isolate the alpha effect.
"""

from __future__ import annotations

import logging
from typing import List, Optional, Sequence

from ..dynamics import VoigtParams
from ..integration import IntegratorConfig, RunStatus, VoigtIntegrator
from ..spectral import Grid, SpectralVectorField, l2_norm
from .curves import fit_or_none
from .models import ConvergenceRow, ConvergenceTable, CurvePoint

logger = logging.getLogger(__name__)


def convergence_study(
    u0: SpectralVectorField,
    n: int,
    t_final: float,
    alphas: Sequence[float],
    dt: float,
    drift_abort_tol: float = 1e-6,
    tail_threshold: float = 1e-6,
) -> ConvergenceTable:
    """Tabulate e(alpha) = ||u^alpha(T) - u^0(T)|| for a ladder of alphas.

    Every run uses the same grid and fixed step. If the alpha = 0 reference is
    not VALID or not resolved, the table is returned with that status and no
    rows.

    Args:
        u0: Shared initial velocity
        n: Grid size
        t_final: Horizon T
        alphas: Alphas in descending order
        dt: Fixed step used by every run
        drift_abort_tol: Conservation abort level for each run
        tail_threshold: Spectrum tail fraction below which a run is resolved
    """
    grid = Grid(n)
    config = IntegratorConfig(
        dt=dt,
        t_final=t_final,
        sample_stride=max(1, int(round(t_final / dt))),
        drift_abort_tol=drift_abort_tol,
        tail_threshold=tail_threshold,
    )

    reference = VoigtIntegrator(VoigtParams(0.0, grid), config).run(u0)
    ref_summary = reference.summary
    table = ConvergenceTable(
        n=n,
        t_final=t_final,
        dt=dt,
        reference_status=ref_summary.status.value,
        reference_reason=ref_summary.status_reason,
        reference_tail_fraction=ref_summary.tail_fraction,
    )
    if ref_summary.status == RunStatus.VALID and not ref_summary.resolved:
        table.reference_status = RunStatus.INVALID.value
        table.reference_reason = (
            f"Euler reference under-resolved: tail fraction "
            f"{ref_summary.tail_fraction:.3e} >= {tail_threshold:.1e}"
        )
    if not table.is_valid:
        logger.error(f"Convergence study INVALID: {table.reference_reason}")
        return table

    u_ref = reference.state.u
    norm0 = l2_norm(u0)
    table.reference_norm = l2_norm(u_ref)
    rows: List[ConvergenceRow] = []
    previous: Optional[float] = None
    for alpha in alphas:
        outcome = VoigtIntegrator(VoigtParams(alpha, grid), config).run(u0)
        if outcome.summary.status != RunStatus.VALID:
            rows.append(ConvergenceRow(alpha=alpha, status=outcome.summary.status.value))
            previous = None
            continue
        u = outcome.state.u
        error = l2_norm(u - u_ref)
        ratio = None
        if previous is not None and error > 0.0:
            ratio = previous / error
        rows.append(
            ConvergenceRow(
                alpha=alpha,
                status=RunStatus.VALID.value,
                error=error,
                error_over_alpha=error / alpha if alpha > 0.0 else None,
                relative_error=(
                    error / table.reference_norm if table.reference_norm else None
                ),
                ratio=ratio,
                norm_gap=abs(l2_norm(u) - norm0) / norm0 if norm0 > 0.0 else 0.0,
            )
        )
        previous = error
        logger.info(f"alpha={alpha!r}: error={error:.6e} ratio={ratio}")

    table.rows = rows
    table.order_fit = fit_or_none(
        [
            CurvePoint(alpha=r.alpha, value=r.error)
            for r in rows
            if r.error is not None and r.alpha > 0.0
        ]
    )
    return table

