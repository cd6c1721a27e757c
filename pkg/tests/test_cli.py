"""Tests for the eulervoigt command line."""

import pytest

from eulervoigt.cli.runner import (
    EXIT_OK,
    EXIT_RUN_FAILED,
    EXIT_USAGE,
    cli_main,
)
from eulervoigt.io.artifacts import read_json, read_run_summary, read_sweep_summary
from eulervoigt.io.checkpoint import read_checkpoint
from eulervoigt.io.config import OUTPUT_DIR_ENV

SHEAR_CONFIG = """
[grid]
n = 16

[ic]
kind = "shear"

[voigt]
alphas = [0.2, 0.1, 0.05]

[time]
dt = 0.01
t_final = 0.1
sample_stride = 1

[analysis]
time_grid_points = 5
"""

COARSE_CONFIG = """
[grid]
n = 16

[voigt]
alphas = [0.2, 0.1, 0.05]

[time]
dt = 0.05
t_final = 0.5

[run]
drift_abort_tol = 1e-14
"""


@pytest.fixture
def shear_config(tmp_path):
    path = tmp_path / "shear.toml"
    path.write_text(SHEAR_CONFIG)
    return str(path)


@pytest.fixture
def coarse_config(tmp_path):
    path = tmp_path / "coarse.toml"
    path.write_text(COARSE_CONFIG)
    return str(path)


def test_help():
    assert cli_main(["--help"]) == EXIT_OK


def test_ic_writes_checkpoint(tmp_path, shear_config):
    out = tmp_path / "out"
    assert cli_main(["ic", "--config", shear_config, "--output", str(out)]) == EXIT_OK
    checkpoint = read_checkpoint(out / "initial_condition.evck", expected_n=16)
    assert checkpoint.t == 0.0


def test_ic_uses_environment_output_dir(tmp_path, shear_config, monkeypatch):
    monkeypatch.setenv(OUTPUT_DIR_ENV, str(tmp_path / "from-env"))
    assert cli_main(["ic", "--config", shear_config]) == EXIT_OK
    assert (tmp_path / "from-env" / "initial_condition.evck").exists()


def test_run_single_alpha(tmp_path, shear_config, capsys):
    out = tmp_path / "out"
    code = cli_main(
        ["run", "--config", shear_config, "--output", str(out), "--alpha", "0.3"]
    )
    assert code == EXIT_OK
    summary = read_run_summary(out / "runs" / "run_00_alpha_0.3" / "summary.json")
    assert summary.is_valid
    assert summary.t_reached == 0.1
    assert "VALID" in capsys.readouterr().out


def test_run_from_checkpoint(tmp_path, shear_config):
    out = tmp_path / "out"
    assert cli_main(["ic", "--config", shear_config, "--output", str(out)]) == EXIT_OK
    initial = str(out / "initial_condition.evck")
    code = cli_main(
        ["run", "--config", shear_config, "--output", str(out), "--initial", initial]
    )
    assert code == EXIT_OK
    summary = read_run_summary(out / "runs" / "run_00_alpha_0.2" / "summary.json")
    assert summary.alpha == 0.2


def test_run_invalid_exits_with_run_failure(tmp_path, coarse_config):
    code = cli_main(["run", "--config", coarse_config, "--output", str(tmp_path)])
    assert code == EXIT_RUN_FAILED


class TestSweepAndAnalyze:
    def test_sweep_then_analyze(self, tmp_path, shear_config, capsys):
        out = tmp_path / "out"
        assert cli_main(["sweep", "--config", shear_config, "--output", str(out)]) == 0
        printed = capsys.readouterr().out
        assert "Verdict: new criterion VANISHES" in printed

        payload = read_sweep_summary(out / "sweep_summary.json")
        assert [r["alpha"] for r in payload["runs"]] == [0.2, 0.1, 0.05]
        before = (out / "analysis.json").read_bytes()

        assert cli_main(["analyze", "--config", shear_config, "--output", str(out)]) == 0
        assert (out / "analysis.json").read_bytes() == before

    def test_workers_do_not_change_artifacts(self, tmp_path, shear_config):
        serial, parallel = tmp_path / "serial", tmp_path / "parallel"
        args = ["sweep", "--config", shear_config, "--output"]
        assert cli_main([*args, str(serial), "--workers", "1"]) == EXIT_OK
        assert cli_main([*args, str(parallel), "--workers", "3"]) == EXIT_OK
        for name in ("sweep_summary.json", "analysis.json"):
            assert (serial / name).read_bytes() == (parallel / name).read_bytes()

    def test_sweep_without_valid_runs(self, tmp_path, coarse_config):
        code = cli_main(["sweep", "--config", coarse_config, "--output", str(tmp_path)])
        assert code == EXIT_RUN_FAILED

    def test_analyze_without_artifacts(self, tmp_path):
        assert cli_main(["analyze", "--output", str(tmp_path)]) == EXIT_USAGE


class TestUsageErrors:
    def test_missing_config_file(self, tmp_path):
        code = cli_main(["ic", "--config", str(tmp_path / "missing.toml")])
        assert code == EXIT_USAGE

    def test_unknown_config_key(self, tmp_path):
        path = tmp_path / "bad.toml"
        path.write_text("[grid]\nn = 16\nresolution = 2\n")
        assert cli_main(["ic", "--config", str(path), "--output", str(tmp_path)]) == 1

    def test_band_limited_ic(self, tmp_path):
        path = tmp_path / "wide.toml"
        path.write_text('[grid]\nn = 16\n\n[ic]\nkind = "shear"\nmodes = 6\n')
        assert cli_main(["ic", "--config", str(path), "--output", str(tmp_path)]) == 1

    def test_bad_sweep_alphas(self, tmp_path):
        path = tmp_path / "alphas.toml"
        path.write_text("[grid]\nn = 16\n\n[voigt]\nalphas = [0.1, 0.2]\n")
        code = cli_main(["sweep", "--config", str(path), "--output", str(tmp_path)])
        assert code == EXIT_USAGE

    def test_unknown_suite(self):
        assert cli_main(["verify", "--suite", "turbulence"]) == EXIT_USAGE

    def test_negative_seed(self):
        assert cli_main(["ic", "--seed", "-1"]) == EXIT_USAGE


def test_verify_shear_suite(capsys):
    assert cli_main(["verify", "--suite", "shear"]) == EXIT_OK
    assert "VERIFICATION REPORT" in capsys.readouterr().out


def test_verify_writes_json_report(tmp_path, capsys):
    path = tmp_path / "reports" / "verify.json"
    assert cli_main(["verify", "--suite", "shear", "--report", str(path)]) == EXIT_OK
    payload = read_json(path)
    assert payload["passed"] is True
    assert [r["suite"] for r in payload["results"]] == ["shear"]
    out = capsys.readouterr().out
    assert "Pass Rate: 100.0% (1 suites)" in out
    assert f"Wrote {path}" in out
