"""
Integration loop producing a RunSummary for one (alpha, T) run.

q is evaluated after every accepted step so the running maximum M(alpha, T)
is exact for the discrete trajectory; full records go to the sink only every
``sample_stride`` steps plus the first and last sample.
"""

from __future__ import annotations

import logging
from typing import Optional, Tuple

from ..diagnostics import energy_spectrum, sample_record, tail_fraction
from ..dynamics import VoigtParams
from ..errors import ConservationBreachError, NumericalBlowupError
from ..spectral import SpectralVectorField
from .models import IntegratorConfig, RunOutcome, RunState, RunStatus, RunSummary
from .sinks import DiagnosticsSink, ListSink
from .stepper import cfl_dt, rk4_step

logger = logging.getLogger(__name__)

#: Slack allowed on the alpha-energy ceiling M^2 <= E_a(0).
CEILING_SLACK = 1e-10

#: A remaining interval shorter than this fraction of a step is merged into it.
SLIVER_FRACTION = 1e-9


class VoigtIntegrator:
    """Integrate one Euler-Voigt run and keep its conservation bookkeeping.

    Example:
        >>> integrator = VoigtIntegrator(params, IntegratorConfig(dt=1e-3, t_final=0.5))
        >>> outcome = integrator.run(u0)
        >>> outcome.summary.M
    """

    def __init__(
        self,
        params: VoigtParams,
        config: IntegratorConfig,
        sink: Optional[DiagnosticsSink] = None,
    ):
        self.params = params
        self.config = config
        self.sink = sink if sink is not None else ListSink()

    def run(self, u0: SpectralVectorField) -> RunOutcome:
        """Integrate from u0 to config.t_final.

        Conservation breaches and non-finite states end the run early and are
        reported through the summary status instead of being raised.
        """
        config = self.config
        params = self.params
        alpha = params.alpha

        first = sample_record(u0, params, t=0.0, dt=0.0)
        state = RunState(
            u=u0,
            alpha_energy0=first.alpha_energy,
            energy0=first.energy,
        )
        state.observe(first.q, first.alpha_energy, first.energy)
        self.sink.emit(first)
        q_final = first.q

        status = RunStatus.VALID
        reason: Optional[str] = None
        logger.info(
            f"Starting run alpha={alpha!r} n={params.grid.n} T={config.t_final!r}"
        )

        try:
            while state.t < config.t_final:
                t_next, dt_used = self._next_time(state)
                state = rk4_step(state, dt_used, params, t_next=t_next)

                record = sample_record(state.u, params, t=state.t, dt=dt_used)
                drift = state.observe(record.q, record.alpha_energy, record.energy)
                q_final = record.q

                is_last = state.t >= config.t_final
                if is_last or state.step_count % config.sample_stride == 0:
                    self.sink.emit(record)

                if drift > config.drift_abort_tol:
                    raise ConservationBreachError(
                        f"alpha-energy drift {drift:.3e} exceeds "
                        f"{config.drift_abort_tol:.1e} at t={state.t!r}",
                        drift=drift,
                    )
        except NumericalBlowupError as e:
            status = RunStatus.DIVERGED
            reason = str(e)
            logger.error(f"Run alpha={alpha!r} diverged: {e}", exc_info=True)
        except ConservationBreachError as e:
            status = RunStatus.INVALID
            reason = str(e)
            logger.error(f"Run alpha={alpha!r} aborted: {e}", exc_info=True)
        finally:
            self.sink.close()

        ceiling = state.alpha_energy0 * (1.0 + state.max_drift) + CEILING_SLACK
        if status == RunStatus.VALID and state.running_max_q**2 > ceiling:
            status = RunStatus.INVALID
            reason = (
                f"M^2={state.running_max_q**2!r} exceeds alpha-energy ceiling "
                f"{ceiling!r}"
            )
            logger.error(f"Run alpha={alpha!r} failed ceiling check: {reason}")

        tail = tail_fraction(energy_spectrum(state.u, params.grid), params.grid)
        resolved = tail < config.tail_threshold
        if not resolved:
            logger.warning(
                f"Run alpha={alpha!r} under-resolved: tail fraction {tail:.3e}"
            )

        summary = RunSummary(
            alpha=alpha,
            n=params.grid.n,
            t_final=config.t_final,
            t_reached=state.t,
            M=state.running_max_q,
            t_argmax=state.t_argmax,
            q_final=q_final,
            drift=state.max_drift,
            energy_drift=state.max_energy_drift,
            alpha_energy0=state.alpha_energy0,
            steps=state.step_count,
            status=status,
            status_reason=reason,
            tail_fraction=tail,
            resolved=resolved,
        )
        logger.info(
            f"Finished run alpha={alpha!r}: status={status.value} "
            f"M={summary.M!r} drift={summary.drift:.3e} steps={summary.steps}"
        )
        return RunOutcome(summary=summary, state=state)

    def _next_time(self, state: RunState) -> Tuple[float, float]:
        """Target time and step size of the next step.

        The last step lands exactly on t_final and is the only one whose size is
        recomputed from the remaining interval.
        """
        config = self.config
        if config.adaptive:
            dt = cfl_dt(state.u, self.params.grid, config.cfl, config.dt_max)
            t_next = state.t + dt
        else:
            assert config.dt is not None
            dt = config.dt
            # Multiples of dt avoid accumulating t += dt roundoff.
            t_next = (state.step_count + 1) * dt
        remaining = config.t_final - state.t
        if t_next >= config.t_final:
            return config.t_final, min(dt, remaining)
        if config.t_final - t_next < SLIVER_FRACTION * dt:
            # Sliver merged into this step.
            return config.t_final, remaining
        return t_next, dt


def integrate(
    u0: SpectralVectorField,
    params: VoigtParams,
    config: IntegratorConfig,
    sink: Optional[DiagnosticsSink] = None,
) -> RunSummary:
    """Integrate one run and return its summary."""
    return VoigtIntegrator(params, config, sink).run(u0).summary
