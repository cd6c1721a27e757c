"""
Sweep runner with parallel execution support.

Each alpha is an independent integration from the shared initial condition.
Runs go to a process pool when more than one worker is requested; results are
collected in alpha order, so summaries do not depend on the worker count.
"""

from __future__ import annotations

import asyncio
import logging
from concurrent.futures import Executor, ProcessPoolExecutor
from dataclasses import dataclass
from pathlib import Path
from typing import List, Optional

from ...io.artifacts import (
    FINAL_STATE_FILENAME,
    INITIAL_CONDITION_FILENAME,
    RUNS_DIRNAME,
    SERIES_FILENAME,
    SUMMARY_FILENAME,
    SeriesCsvSink,
    records_to_frame,
    run_dirname,
    write_run_summary,
)
from ...io.checkpoint import Checkpoint, write_checkpoint
from ...io.initial_conditions import generate_ic
from ..diagnostics import TimeSeriesRecord
from ..dynamics import VoigtParams
from ..errors import SweepError
from ..integration import (
    CompositeSink,
    DiagnosticsSink,
    IntegratorConfig,
    ListSink,
    LoggingSink,
    RunSummary,
    VoigtIntegrator,
)
from ..spectral import Grid, SpectralVectorField
from .models import SweepConfig, SweepResult

logger = logging.getLogger(__name__)


@dataclass
class RunJob:
    """Everything a worker needs to integrate one alpha.

    Attributes:
        index: Position in the sweep's alpha list
        alpha: Regularization length
        u0: Shared initial velocity coefficients
        n: Grid size
        integrator: Integrator configuration
        output_root: Sweep output directory; None keeps the run in memory
    """

    index: int
    alpha: float
    u0: SpectralVectorField
    n: int
    integrator: IntegratorConfig
    output_root: Optional[Path] = None

    @property
    def relative_dir(self) -> Path:
        return Path(RUNS_DIRNAME) / run_dirname(self.index, self.alpha)


@dataclass
class RunResult:
    summary: RunSummary
    records: List[TimeSeriesRecord]


def execute_run(job: RunJob) -> RunResult:
    """Integrate one job and write its artifacts.

    Module-level so it can be pickled into a worker process.
    """
    grid = Grid(job.n)
    params = VoigtParams(job.alpha, grid)
    collected = ListSink()
    sinks: List[DiagnosticsSink] = [collected, LoggingSink(job.alpha)]
    run_dir: Optional[Path] = None
    if job.output_root is not None:
        run_dir = job.output_root / job.relative_dir
        sinks.append(SeriesCsvSink(run_dir / SERIES_FILENAME))

    outcome = VoigtIntegrator(params, job.integrator, CompositeSink(sinks)).run(job.u0)
    summary = outcome.summary

    if run_dir is not None:
        summary = summary.model_copy(
            update={"series_path": (job.relative_dir / SERIES_FILENAME).as_posix()}
        )
        write_run_summary(run_dir / SUMMARY_FILENAME, summary)
        write_checkpoint(
            run_dir / FINAL_STATE_FILENAME,
            Checkpoint.from_spectral(
                outcome.state.u, grid, alpha=job.alpha, t=outcome.state.t
            ),
        )
    return RunResult(summary=summary, records=collected.records)


class SweepRunner:
    """Run an alpha sweep with bounded parallelism.

    Example:
        >>> runner = SweepRunner(max_workers=4, output_dir=Path("out"))
        >>> result = await runner.run(SweepConfig(alphas=[0.2, 0.1, 0.05]))
        >>> [r.M for r in result.runs]
    """

    def __init__(self, max_workers: int = 1, output_dir: Optional[Path] = None):
        """Initialize the sweep runner.

        Args:
            max_workers: Concurrent runs; 1 integrates in the calling process
            output_dir: Where artifacts are written, if anywhere
        """
        if max_workers < 1:
            raise ValueError(f"max_workers must be >= 1, got {max_workers}")
        self.max_workers = max_workers
        self.output_dir = output_dir
        self._semaphore = asyncio.Semaphore(max_workers)

    async def run(self, config: SweepConfig) -> SweepResult:
        """Run every alpha of a sweep.

        Raises:
            SweepError: If no run ends VALID
        """
        grid = Grid(config.n)
        u0 = generate_ic(config.initial_condition, grid)
        if self.output_dir is not None:
            write_checkpoint(
                self.output_dir / INITIAL_CONDITION_FILENAME,
                Checkpoint.from_spectral(u0, grid, alpha=0.0, t=0.0),
            )

        jobs = [
            RunJob(
                index=i,
                alpha=alpha,
                u0=u0,
                n=config.n,
                integrator=config.integrator,
                output_root=self.output_dir,
            )
            for i, alpha in enumerate(config.alphas)
        ]
        logger.info(
            f"Starting sweep of {len(jobs)} runs at n={config.n}, "
            f"T={config.t_final!r}, workers={self.max_workers}"
        )

        if self.max_workers == 1:
            results = [execute_run(job) for job in jobs]
        else:
            with ProcessPoolExecutor(max_workers=self.max_workers) as pool:
                results = await self._run_jobs_parallel(pool, jobs)

        runs = [r.summary for r in results]
        if not any(r.is_valid for r in runs):
            raise SweepError(
                "No run in the sweep ended VALID; the resolution or time step "
                "is likely insufficient"
            )
        for summary in runs:
            if not summary.is_valid:
                logger.warning(
                    f"Run alpha={summary.alpha!r} ended {summary.status.value}: "
                    f"{summary.status_reason}"
                )

        return SweepResult(
            config=config,
            runs=runs,
            series=[records_to_frame(r.records) for r in results],
        )

    async def _run_jobs_parallel(
        self, pool: Executor, jobs: List[RunJob]
    ) -> List[RunResult]:
        tasks = [self._run_single_job(pool, job) for job in jobs]
        return list(await asyncio.gather(*tasks))

    async def _run_single_job(self, pool: Executor, job: RunJob) -> RunResult:
        async with self._semaphore:
            loop = asyncio.get_running_loop()
            return await loop.run_in_executor(pool, execute_run, job)


def run_sweep(
    config: SweepConfig, workers: int = 1, output_dir: Optional[Path] = None
) -> SweepResult:
    """Synchronous entry point around :class:`SweepRunner`."""
    return asyncio.run(SweepRunner(max_workers=workers, output_dir=output_dir).run(config))
