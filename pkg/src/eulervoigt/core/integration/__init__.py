"""Time integration: RK4 and CFL-adaptive stepping with running-max tracking."""

from .integrator import VoigtIntegrator, integrate
from .models import IntegratorConfig, RunOutcome, RunState, RunStatus, RunSummary
from .sinks import CompositeSink, DiagnosticsSink, ListSink, LoggingSink
from .stepper import cfl_dt, rk4_step

__all__ = [
    "CompositeSink",
    "DiagnosticsSink",
    "IntegratorConfig",
    "ListSink",
    "LoggingSink",
    "RunOutcome",
    "RunState",
    "RunStatus",
    "RunSummary",
    "VoigtIntegrator",
    "cfl_dt",
    "integrate",
    "rk4_step",
]
