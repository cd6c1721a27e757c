"""
Reading and writing whole sweeps.

``sweep_summary.json`` holds the sweep configuration, every run summary and
the analysis; it carries no timestamps or worker counts so it is bitwise
reproducible from the configuration.
"""

from __future__ import annotations

import logging
from pathlib import Path
from typing import Any, Dict, List

import pandas as pd

from ...io.artifacts import (
    ANALYSIS_FILENAME,
    SWEEP_SUMMARY_FILENAME,
    ArtifactError,
    read_series,
    read_sweep_summary,
    write_json,
)
from ..integration import RunSummary
from .models import SweepAnalysis, SweepConfig, SweepResult

logger = logging.getLogger(__name__)


def save_sweep(output_dir: Path, sweep: SweepResult, analysis: SweepAnalysis) -> Path:
    """Write the sweep summary and analysis; returns the summary path."""
    payload: Dict[str, Any] = {
        "config": sweep.config.model_dump(mode="json"),
        "runs": [r.model_dump(mode="json") for r in sweep.runs],
        "analysis": analysis.model_dump(mode="json"),
    }
    path = write_json(output_dir / SWEEP_SUMMARY_FILENAME, payload)
    save_analysis(output_dir, analysis)
    logger.info(f"Wrote sweep summary {path}")
    return path


def save_analysis(output_dir: Path, analysis: SweepAnalysis) -> Path:
    return write_json(output_dir / ANALYSIS_FILENAME, analysis.model_dump(mode="json"))


def load_sweep(output_dir: Path) -> SweepResult:
    """Rebuild a SweepResult from a sweep's artifacts, without simulating.

    Raises:
        ArtifactError: If the summary or a VALID run's series is missing or
            malformed
    """
    payload = read_sweep_summary(output_dir / SWEEP_SUMMARY_FILENAME)
    config = SweepConfig.model_validate(payload["config"])
    runs = [RunSummary.model_validate(r) for r in payload["runs"]]

    series: List[pd.DataFrame] = []
    for run in runs:
        if run.series_path is None:
            if run.is_valid:
                raise ArtifactError(f"VALID run alpha={run.alpha!r} has no series")
            series.append(pd.DataFrame())
            continue
        series.append(read_series(output_dir / run.series_path))
    return SweepResult(config=config, runs=runs, series=series)
