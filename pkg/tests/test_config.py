"""Tests for TOML/YAML configuration loading."""

from pathlib import Path

import pytest

from eulervoigt.core.errors import ConfigError
from eulervoigt.io.config import (
    DEFAULT_OUTPUT_DIR,
    OUTPUT_DIR_ENV,
    VoigtConfig,
    load_config,
    resolve_output_dir,
)
from eulervoigt.io.initial_conditions import InitialConditionKind

TOML_CONFIG = """
workers = 2

[grid]
n = 16

[ic]
kind = "abc"
A = 0.5

[voigt]
alphas = [0.2, 0.1, 0.05]

[time]
dt = 0.002
t_final = 0.1
sample_stride = 5

[fit]
r2_threshold = 0.9

[analysis]
time_grid_points = 6
"""

YAML_CONFIG = """
grid:
  n: 16
ic:
  kind: random-solenoidal
  seed: 3
voigt:
  alphas: [0.3, 0.2, 0.1]
time:
  adaptive: true
  dt: null
  dt_max: 0.005
  t_final: 0.2
output:
  dir: results
"""


def _write(tmp_path, name, text):
    path = tmp_path / name
    path.write_text(text)
    return path


class TestLoadConfig:
    def test_defaults(self):
        config = load_config(None)
        assert config.grid.n == 32
        assert config.voigt.alphas == [0.2, 0.1, 0.05, 0.025]
        assert config.ic.kind == InitialConditionKind.TAYLOR_GREEN
        assert config.workers == 1

    def test_toml(self, tmp_path):
        config = load_config(_write(tmp_path, "voigt.toml", TOML_CONFIG))
        assert config.workers == 2
        assert config.ic.kind == InitialConditionKind.ABC
        assert config.ic.A == 0.5

        sweep = config.sweep_config()
        assert sweep.n == 16
        assert sweep.alphas == [0.2, 0.1, 0.05]
        assert sweep.integrator.dt == 0.002
        assert sweep.integrator.sample_stride == 5
        assert sweep.thresholds.r2_threshold == 0.9
        assert sweep.time_grid()[-1] == 0.1
        assert len(sweep.time_grid()) == 6

    def test_yaml(self, tmp_path):
        config = load_config(_write(tmp_path, "voigt.yaml", YAML_CONFIG))
        integrator = config.integrator_config()
        assert integrator.adaptive
        assert integrator.dt is None
        assert integrator.dt_max == 0.005
        assert config.ic.seed == 3
        assert config.output.dir == "results"

    def test_empty_yaml_gives_defaults(self, tmp_path):
        assert load_config(_write(tmp_path, "empty.yml", "")) == VoigtConfig()

    def test_unknown_key(self, tmp_path):
        path = _write(tmp_path, "bad.toml", "[grid]\nn = 16\nsize = 3\n")
        with pytest.raises(ConfigError, match="Invalid config"):
            load_config(path)

    def test_odd_grid(self, tmp_path):
        with pytest.raises(ConfigError):
            load_config(_write(tmp_path, "odd.toml", "[grid]\nn = 17\n"))

    def test_unsupported_suffix(self, tmp_path):
        with pytest.raises(ConfigError, match="Unsupported"):
            load_config(_write(tmp_path, "voigt.json", "{}"))

    def test_unparseable(self, tmp_path):
        with pytest.raises(ConfigError, match="parse"):
            load_config(_write(tmp_path, "voigt.toml", "[grid\n"))

    def test_missing_file(self, tmp_path):
        with pytest.raises(ConfigError, match="Cannot read"):
            load_config(tmp_path / "missing.toml")

    def test_non_decreasing_alphas_rejected_for_sweeps(self, tmp_path):
        path = _write(tmp_path, "v.toml", "[voigt]\nalphas = [0.1, 0.2, 0.05]\n")
        config = load_config(path)
        with pytest.raises(ConfigError, match="sweep"):
            config.sweep_config()


class TestOverrides:
    def test_seed_and_workers(self):
        config = VoigtConfig().with_overrides(seed=11, workers=4)
        assert config.ic.seed == 11
        assert config.workers == 4

    def test_none_keeps_values(self):
        config = VoigtConfig()
        assert config.with_overrides() == config

    def test_invalid_workers(self):
        with pytest.raises(ConfigError):
            VoigtConfig().with_overrides(workers=0)


class TestOutputDir:
    def test_flag_wins(self, monkeypatch):
        monkeypatch.setenv(OUTPUT_DIR_ENV, "from-env")
        config = VoigtConfig.model_validate({"output": {"dir": "from-config"}})
        assert resolve_output_dir("from-flag", config) == Path("from-flag")

    def test_config_before_env(self, monkeypatch):
        monkeypatch.setenv(OUTPUT_DIR_ENV, "from-env")
        config = VoigtConfig.model_validate({"output": {"dir": "from-config"}})
        assert resolve_output_dir(None, config) == Path("from-config")

    def test_env_before_default(self, monkeypatch):
        monkeypatch.setenv(OUTPUT_DIR_ENV, "from-env")
        assert resolve_output_dir(None, VoigtConfig()) == Path("from-env")

    def test_default(self, monkeypatch):
        monkeypatch.delenv(OUTPUT_DIR_ENV, raising=False)
        assert resolve_output_dir(None, VoigtConfig()) == Path(DEFAULT_OUTPUT_DIR)
