"""
Initial conditions, checkpoints and on-disk artifacts.

Configuration loading lives in :mod:`eulervoigt.io.config`.
"""

from .artifacts import (
    ArtifactError,
    SeriesCsvSink,
    read_run_summary,
    read_series,
    records_to_frame,
    write_run_summary,
)
from .checkpoint import Checkpoint, read_checkpoint, write_checkpoint
from .initial_conditions import InitialConditionKind, InitialConditionSpec, generate_ic

__all__ = [
    "ArtifactError",
    "Checkpoint",
    "InitialConditionKind",
    "InitialConditionSpec",
    "SeriesCsvSink",
    "generate_ic",
    "read_checkpoint",
    "read_run_summary",
    "read_series",
    "records_to_frame",
    "write_checkpoint",
    "write_run_summary",
]
