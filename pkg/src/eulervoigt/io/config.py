"""
Configuration documents for the command-line tools.

A config file is TOML or YAML with the sections below; unknown keys are
rejected. Example::

    workers = 2

    [grid]
    n = 32

    [ic]
    kind = "taylor-green"

    [voigt]
    alphas = [0.2, 0.1, 0.05, 0.025]

    [time]
    dt = 1e-3
    t_final = 0.5
"""

from __future__ import annotations

import logging
import os
from pathlib import Path
from typing import Any, Dict, List, Optional, Union

import yaml
from pydantic import BaseModel, ConfigDict, Field, ValidationError, field_validator

from ..core._compat import tomllib
from ..core.criteria.models import SweepConfig, Thresholds
from ..core.errors import ConfigError
from ..core.integration import IntegratorConfig
from .initial_conditions import InitialConditionSpec

logger = logging.getLogger(__name__)

OUTPUT_DIR_ENV = "VOIGT_OUTPUT_DIR"
DEFAULT_OUTPUT_DIR = "voigt-output"


class GridSection(BaseModel):
    model_config = ConfigDict(extra="forbid")

    n: int = Field(default=32, ge=8, description="Points per dimension, even")

    @field_validator("n")
    @classmethod
    def check_even(cls, n: int) -> int:
        if n % 2 != 0:
            raise ValueError(f"grid.n must be even, got {n}")
        return n


class InitialConditionSection(InitialConditionSpec):
    """``[ic]``: the initial-condition kind and its parameters."""


class VoigtSection(BaseModel):
    model_config = ConfigDict(extra="forbid")

    alphas: List[float] = Field(
        default_factory=lambda: [0.2, 0.1, 0.05, 0.025],
        min_length=1,
        description="Regularization lengths, strictly decreasing for sweeps",
    )


class TimeSection(BaseModel):
    model_config = ConfigDict(extra="forbid")

    dt: Optional[float] = Field(default=1e-3, gt=0.0, description="Fixed step")
    adaptive: bool = Field(default=False, description="CFL-adaptive stepping")
    cfl: float = Field(default=0.5, gt=0.0, le=1.0)
    dt_max: float = Field(default=1e-2, gt=0.0)
    t_final: float = Field(default=1.0, gt=0.0, description="Common final time T")
    sample_stride: int = Field(default=10, ge=1)


class RunSection(BaseModel):
    model_config = ConfigDict(extra="forbid")

    drift_abort_tol: float = Field(
        default=1e-6, gt=0.0, description="Relative alpha-energy drift that aborts a run"
    )


class FitSection(Thresholds):
    """``[fit]``: classification thresholds."""


class AnalysisSection(BaseModel):
    model_config = ConfigDict(extra="forbid")

    time_grid_points: int = Field(
        default=11, ge=1, description="Old-criterion grid is linspace(0, T, points)"
    )
    tail_threshold: float = Field(
        default=1e-6, gt=0.0, description="Spectrum tail fraction deemed resolved"
    )


class OutputSection(BaseModel):
    model_config = ConfigDict(extra="forbid")

    dir: Optional[str] = Field(default=None, description="Artifact directory")


class VoigtConfig(BaseModel):
    """A complete tool configuration."""

    model_config = ConfigDict(extra="forbid")

    grid: GridSection = Field(default_factory=GridSection)
    ic: InitialConditionSection = Field(default_factory=InitialConditionSection)
    voigt: VoigtSection = Field(default_factory=VoigtSection)
    time: TimeSection = Field(default_factory=TimeSection)
    run: RunSection = Field(default_factory=RunSection)
    fit: FitSection = Field(default_factory=FitSection)
    analysis: AnalysisSection = Field(default_factory=AnalysisSection)
    output: OutputSection = Field(default_factory=OutputSection)
    workers: int = Field(default=1, ge=1, description="Concurrent runs in a sweep")

    def integrator_config(self) -> IntegratorConfig:
        return IntegratorConfig(
            dt=self.time.dt,
            adaptive=self.time.adaptive,
            cfl=self.time.cfl,
            dt_max=self.time.dt_max,
            t_final=self.time.t_final,
            sample_stride=self.time.sample_stride,
            drift_abort_tol=self.run.drift_abort_tol,
            tail_threshold=self.analysis.tail_threshold,
        )

    def sweep_config(self) -> SweepConfig:
        """The sweep described by this config.

        Raises:
            ConfigError: If the alphas do not form a valid sweep
        """
        try:
            return SweepConfig(
                alphas=self.voigt.alphas,
                n=self.grid.n,
                initial_condition=InitialConditionSpec.model_validate(
                    self.ic.model_dump()
                ),
                integrator=self.integrator_config(),
                thresholds=Thresholds.model_validate(self.fit.model_dump()),
                time_grid_points=self.analysis.time_grid_points,
            )
        except ValidationError as e:
            raise ConfigError(f"Invalid sweep configuration: {e}") from e

    def with_overrides(
        self, seed: Optional[int] = None, workers: Optional[int] = None
    ) -> "VoigtConfig":
        """Copy with command-line overrides applied."""
        updated = self
        if seed is not None:
            updated = updated.model_copy(
                update={"ic": updated.ic.model_copy(update={"seed": seed})}
            )
        if workers is not None:
            if workers < 1:
                raise ConfigError(f"workers must be >= 1, got {workers}")
            updated = updated.model_copy(update={"workers": workers})
        return updated


def _read_document(path: Path) -> Dict[str, Any]:
    suffix = path.suffix.lower()
    try:
        if suffix == ".toml":
            with open(path, "rb") as f:
                data: Any = tomllib.load(f)
        elif suffix in (".yaml", ".yml"):
            with open(path, "r") as f:
                data = yaml.safe_load(f)
        else:
            raise ConfigError(
                f"Unsupported config format {suffix!r}; use .toml, .yaml or .yml"
            )
    except OSError as e:
        raise ConfigError(f"Cannot read config {path}: {e}") from e
    except (tomllib.TOMLDecodeError, yaml.YAMLError) as e:
        raise ConfigError(f"Cannot parse config {path}: {e}") from e

    if data is None:
        return {}
    if not isinstance(data, dict):
        raise ConfigError(f"Config {path} must be a mapping at the top level")
    return data


def load_config(path: Union[str, Path, None]) -> VoigtConfig:
    """Load a config file, or the defaults when path is None.

    Raises:
        ConfigError: If the file is unreadable, has an unknown format, or fails
            validation
    """
    if path is None:
        return VoigtConfig()
    path = Path(path)
    try:
        config = VoigtConfig.model_validate(_read_document(path))
    except ValidationError as e:
        raise ConfigError(f"Invalid config {path}: {e}") from e
    logger.debug(f"Loaded config {path}")
    return config


def resolve_output_dir(flag: Optional[str], config: VoigtConfig) -> Path:
    """Output directory: flag, then output.dir, then $VOIGT_OUTPUT_DIR, then default."""
    for candidate in (flag, config.output.dir, os.environ.get(OUTPUT_DIR_ENV)):
        if candidate:
            return Path(candidate)
    return Path(DEFAULT_OUTPUT_DIR)
