"""
On-disk artifacts of runs and sweeps.

Series are CSV with a header row and one sample per line; floats are written
with ``repr`` and read back with pandas' round-trip parser so a sweep analysed
from disk sees the same numbers it saw in memory. Summaries are JSON checked
against the schemas below on load.
"""

from __future__ import annotations

import csv
import json
import logging
import math
from pathlib import Path
from typing import IO, Any, Dict, List, Optional, Union

import pandas as pd
from jsonschema import validate  # type: ignore[import-untyped]
from jsonschema.exceptions import ValidationError as JsonSchemaValidationError  # type: ignore[import-untyped]

from ..core.diagnostics import SERIES_COLUMNS, TimeSeriesRecord
from ..core.errors import VoigtError
from ..core.integration import DiagnosticsSink, RunSummary

logger = logging.getLogger(__name__)

SERIES_FILENAME = "series.csv"
SUMMARY_FILENAME = "summary.json"
FINAL_STATE_FILENAME = "final_state.evck"
INITIAL_CONDITION_FILENAME = "initial_condition.evck"
SWEEP_SUMMARY_FILENAME = "sweep_summary.json"
ANALYSIS_FILENAME = "analysis.json"
RUNS_DIRNAME = "runs"

_NUMBER = {"type": "number"}
_NULLABLE_NUMBER = {"type": ["number", "null"]}

RUN_SUMMARY_SCHEMA: Dict[str, Any] = {
    "type": "object",
    "required": [
        "alpha",
        "n",
        "t_final",
        "t_reached",
        "M",
        "t_argmax",
        "q_final",
        "drift",
        "energy_drift",
        "alpha_energy0",
        "steps",
        "status",
        "tail_fraction",
        "resolved",
    ],
    "properties": {
        "alpha": {"type": "number", "minimum": 0},
        "n": {"type": "integer", "minimum": 8},
        "t_final": _NUMBER,
        "t_reached": _NUMBER,
        "M": {"type": "number", "minimum": 0},
        "t_argmax": _NUMBER,
        "q_final": _NUMBER,
        "drift": _NUMBER,
        "energy_drift": _NUMBER,
        "alpha_energy0": _NUMBER,
        "steps": {"type": "integer", "minimum": 0},
        "status": {"enum": ["VALID", "INVALID", "DIVERGED"]},
        "status_reason": {"type": ["string", "null"]},
        "tail_fraction": _NUMBER,
        "resolved": {"type": "boolean"},
        "series_path": {"type": ["string", "null"]},
    },
    "additionalProperties": False,
}

SWEEP_SUMMARY_SCHEMA: Dict[str, Any] = {
    "type": "object",
    "required": ["config", "runs", "analysis"],
    "properties": {
        "config": {"type": "object"},
        "runs": {"type": "array", "items": RUN_SUMMARY_SCHEMA},
        "analysis": {"type": "object"},
    },
    "additionalProperties": False,
}


class ArtifactError(VoigtError):
    """An artifact on disk is missing or malformed."""

    pass


def run_dirname(index: int, alpha: float) -> str:
    """Directory name of run ``index``, e.g. ``run_02_alpha_0.05``."""
    return f"run_{index:02d}_alpha_{alpha!r}"


class SeriesCsvSink(DiagnosticsSink):
    """Streams records to a CSV file, enforcing strictly increasing t."""

    def __init__(self, path: Union[str, Path]):
        self.path = Path(path)
        self.path.parent.mkdir(parents=True, exist_ok=True)
        self._file: Optional[IO[str]] = open(self.path, "w", newline="")
        self._writer = csv.writer(self._file)
        self._writer.writerow(SERIES_COLUMNS)
        self._last_t = -math.inf

    def emit(self, record: TimeSeriesRecord) -> None:
        if self._file is None:
            raise ArtifactError(f"Series sink for {self.path} is closed")
        if not record.t > self._last_t:
            raise ArtifactError(
                f"Series times must increase: t={record.t!r} after {self._last_t!r}"
            )
        self._last_t = record.t
        self._writer.writerow([repr(getattr(record, c)) for c in SERIES_COLUMNS])

    def close(self) -> None:
        if self._file is not None:
            self._file.close()
            self._file = None


def records_to_frame(records: List[TimeSeriesRecord]) -> pd.DataFrame:
    """Tabulate in-memory records with the series column layout."""
    return pd.DataFrame(
        [[getattr(r, c) for c in SERIES_COLUMNS] for r in records],
        columns=list(SERIES_COLUMNS),
        dtype="float64",
    )


def read_series(path: Union[str, Path]) -> pd.DataFrame:
    """Load a series CSV.

    Raises:
        ArtifactError: If the file is missing, has other columns, or t is
            not strictly increasing
    """
    path = Path(path)
    try:
        frame = pd.read_csv(path, dtype="float64", float_precision="round_trip")
    except (OSError, ValueError) as e:
        raise ArtifactError(f"Cannot read series {path}: {e}") from e
    if tuple(frame.columns) != SERIES_COLUMNS:
        raise ArtifactError(
            f"Series {path} has columns {list(frame.columns)}, "
            f"expected {list(SERIES_COLUMNS)}"
        )
    if len(frame) > 1 and not (frame["t"].diff().iloc[1:] > 0).all():
        raise ArtifactError(f"Series {path} times are not strictly increasing")
    return frame


def write_json(path: Union[str, Path], payload: Dict[str, Any]) -> Path:
    """Write JSON with sorted keys; non-finite floats are rejected."""
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(json.dumps(payload, indent=2, sort_keys=True, allow_nan=False) + "\n")
    return path


def read_json(path: Union[str, Path], schema: Optional[Dict[str, Any]] = None) -> Any:
    path = Path(path)
    try:
        payload = json.loads(path.read_text())
    except (OSError, ValueError) as e:
        raise ArtifactError(f"Cannot read JSON artifact {path}: {e}") from e
    if schema is not None:
        try:
            validate(instance=payload, schema=schema)
        except JsonSchemaValidationError as e:
            raise ArtifactError(f"{path} failed schema validation: {e.message}") from e
    return payload


def write_run_summary(path: Union[str, Path], summary: RunSummary) -> Path:
    return write_json(path, summary.model_dump(mode="json"))


def read_run_summary(path: Union[str, Path]) -> RunSummary:
    return RunSummary.model_validate(read_json(path, RUN_SUMMARY_SCHEMA))


def read_sweep_summary(path: Union[str, Path]) -> Dict[str, Any]:
    payload: Dict[str, Any] = read_json(path, SWEEP_SUMMARY_SCHEMA)
    return payload
