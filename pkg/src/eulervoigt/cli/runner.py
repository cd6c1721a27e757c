"""
CLI for generating initial conditions, running alpha-sweeps and checking the solver.

Exit codes: 0 success, 1 usage or configuration error, 2 a run ended INVALID
or DIVERGED, 3 a verification or consistency check failed.
"""

import logging
import sys
from typing import List, Optional, Sequence

import click
from tabulate import tabulate

from ..core.criteria import (
    SweepAnalysis,
    SweepResult,
    analyze_sweep,
    load_sweep,
    run_sweep,
    save_analysis,
    save_sweep,
)
from ..core.criteria.runner import RunJob, execute_run
from ..core.errors import (
    BandLimitError,
    CheckpointError,
    ConfigError,
    ConsistencyError,
    FieldValidationError,
    SweepError,
)
from ..core.integration import RunSummary
from ..core.spectral import Grid
from ..core.verification import SUITES, run_suites
from ..io.artifacts import INITIAL_CONDITION_FILENAME, ArtifactError, write_json
from ..io.checkpoint import Checkpoint, read_checkpoint, write_checkpoint
from ..io.config import VoigtConfig, load_config, resolve_output_dir
from ..io.initial_conditions import generate_ic

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_RUN_FAILED = 2
EXIT_VERIFICATION_FAILED = 3

_config_option = click.option(
    "--config",
    "config_path",
    type=click.Path(exists=True, dir_okay=False),
    help="TOML or YAML config file",
)
_output_option = click.option(
    "--output", default=None, help="Artifact directory (overrides config and env)"
)
_seed_option = click.option(
    "--seed",
    type=click.IntRange(min=0),
    default=None,
    help="Initial-condition seed (overrides ic.seed)",
)


def _load(
    config_path: Optional[str],
    seed: Optional[int] = None,
    workers: Optional[int] = None,
) -> VoigtConfig:
    return load_config(config_path).with_overrides(seed=seed, workers=workers)


def _print_runs(runs: List[RunSummary]) -> None:
    rows = [
        [
            r.alpha,
            r.status.value,
            f"{r.M:.6e}",
            f"{r.t_argmax:.4f}",
            f"{r.drift:.2e}",
            r.steps,
        ]
        for r in runs
    ]
    click.echo(
        tabulate(rows, headers=["alpha", "status", "M", "t_argmax", "drift", "steps"])
    )


def _print_analysis(analysis: SweepAnalysis) -> None:
    verdict = analysis.verdict
    fits = [("new", verdict.fit_new), ("old", verdict.fit_old)]
    rows = [
        [
            name,
            "-" if fit is None else ("inf" if fit.is_trivial else f"{fit.beta:.6f}"),
            "-" if fit is None else f"{fit.c:.6e}",
            "-" if fit is None else f"{fit.r2:.6f}",
            "-" if fit is None else f"{fit.limit_estimate:.6e}",
        ]
        for name, fit in fits
    ]
    click.echo(tabulate(rows, headers=["criterion", "beta", "c", "r2", "limit"]))
    click.echo(
        f"Verdict: new criterion {verdict.new_criterion_evidence.value}, "
        f"old criterion {verdict.old_criterion_evidence.value} "
        f"({analysis.n_valid}/{analysis.n_total} runs valid, "
        f"{len(analysis.comparison.violations)} ordering violations)"
    )


def _exit_for_runs(runs: List[RunSummary]) -> int:
    return EXIT_OK if all(r.is_valid for r in runs) else EXIT_RUN_FAILED


@click.group()
@click.option("--debug", is_flag=True, help="Enable debug logging")
def cli(debug: bool) -> None:
    """Euler-Voigt solver and blow-up criterion harness."""
    logging.basicConfig(
        level=logging.DEBUG if debug else logging.INFO,
        format="%(asctime)s %(levelname)s %(name)s: %(message)s",
    )


@cli.command()
@_config_option
@_output_option
@_seed_option
def ic(config_path: Optional[str], output: Optional[str], seed: Optional[int]) -> int:
    """Write the configured initial condition as a checkpoint."""
    config = _load(config_path, seed=seed)
    out = resolve_output_dir(output, config)
    grid = Grid(config.grid.n)
    u0 = generate_ic(config.ic, grid)
    path = write_checkpoint(
        out / INITIAL_CONDITION_FILENAME,
        Checkpoint.from_spectral(u0, grid, alpha=0.0, t=0.0),
    )
    click.echo(f"Wrote {path}")
    return EXIT_OK


@cli.command()
@_config_option
@_output_option
@_seed_option
@click.option(
    "--alpha",
    type=click.FloatRange(min=0.0),
    default=None,
    help="Regularization length (defaults to the first configured alpha)",
)
@click.option(
    "--initial",
    type=click.Path(exists=True, dir_okay=False),
    default=None,
    help="Start from an initial-condition checkpoint instead of generating one",
)
def run(
    config_path: Optional[str],
    output: Optional[str],
    seed: Optional[int],
    alpha: Optional[float],
    initial: Optional[str],
) -> int:
    """Integrate a single alpha and write its series and summary."""
    config = _load(config_path, seed=seed)
    out = resolve_output_dir(output, config)
    grid = Grid(config.grid.n)
    if alpha is None:
        alpha = config.voigt.alphas[0]

    if initial is not None:
        u0 = read_checkpoint(initial, expected_n=grid.n).to_spectral()
    else:
        u0 = generate_ic(config.ic, grid)
        write_checkpoint(
            out / INITIAL_CONDITION_FILENAME,
            Checkpoint.from_spectral(u0, grid, alpha=0.0, t=0.0),
        )

    result = execute_run(
        RunJob(
            index=0,
            alpha=alpha,
            u0=u0,
            n=grid.n,
            integrator=config.integrator_config(),
            output_root=out,
        )
    )
    _print_runs([result.summary])
    return _exit_for_runs([result.summary])


@cli.command()
@_config_option
@_output_option
@_seed_option
@click.option(
    "--workers",
    type=click.IntRange(min=1),
    default=None,
    help="Concurrent runs (overrides config)",
)
def sweep(
    config_path: Optional[str],
    output: Optional[str],
    seed: Optional[int],
    workers: Optional[int],
) -> int:
    """Run every configured alpha, then analyse the sweep."""
    config = _load(config_path, seed=seed, workers=workers)
    out = resolve_output_dir(output, config)
    result: SweepResult = run_sweep(
        config.sweep_config(), workers=config.workers, output_dir=out
    )
    analysis = analyze_sweep(result)
    save_sweep(out, result, analysis)
    _print_runs(result.runs)
    _print_analysis(analysis)
    return _exit_for_runs(result.runs)


@cli.command()
@_config_option
@_output_option
def analyze(config_path: Optional[str], output: Optional[str]) -> int:
    """Recompute curves, fits and verdict from a sweep's artifacts."""
    config = _load(config_path)
    out = resolve_output_dir(output, config)
    result = load_sweep(out)
    analysis = analyze_sweep(result)
    path = save_analysis(out, analysis)
    _print_analysis(analysis)
    click.echo(f"Wrote {path}")
    return EXIT_OK


@cli.command()
@click.option(
    "--suite",
    type=click.Choice([*SUITES, "all"]),
    default="all",
    help="Property suite to run",
)
@click.option(
    "--report",
    "report_path",
    type=click.Path(dir_okay=False),
    default=None,
    help="Also write the report as JSON to this file",
)
def verify(suite: str, report_path: Optional[str]) -> int:
    """Run built-in property suites."""
    report = run_suites(suite)
    click.echo(report.format_summary())
    if report_path is not None:
        click.echo(f"Wrote {write_json(report_path, report.to_dict())}")
    return EXIT_OK if report.passed else EXIT_VERIFICATION_FAILED


def cli_main(argv: Optional[Sequence[str]] = None) -> int:
    """Run the CLI and return its exit code instead of exiting."""
    try:
        result = cli.main(
            args=list(argv) if argv is not None else None,
            prog_name="eulervoigt",
            standalone_mode=False,
        )
    except click.exceptions.Abort:
        click.echo("Aborted!", err=True)
        return EXIT_USAGE
    except click.ClickException as e:
        e.show()
        return EXIT_USAGE
    except (
        ConfigError,
        CheckpointError,
        BandLimitError,
        FieldValidationError,
        ArtifactError,
    ) as e:
        click.echo(f"Error: {e}", err=True)
        return EXIT_USAGE
    except SweepError as e:
        click.echo(f"Error: {e}", err=True)
        return EXIT_RUN_FAILED
    except ConsistencyError as e:
        click.echo(f"Error: {e}", err=True)
        return EXIT_VERIFICATION_FAILED
    return result if isinstance(result, int) else EXIT_OK


def main() -> None:
    sys.exit(cli_main())


if __name__ == "__main__":
    main()
