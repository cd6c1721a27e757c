"""
Built-in property suites run by ``eulervoigt verify``.

Default parameters reproduce the acceptance experiments: spectral identities
on seeded random fields, alpha-energy and Euler energy conservation on
Taylor-Green, the exactly steady shear flow, and convergence as alpha -> 0.
"""

from __future__ import annotations

import logging
import math
from typing import Any, Callable, Dict, List, Sequence

import numpy as np

from ...io.initial_conditions import (
    InitialConditionKind,
    InitialConditionSpec,
    generate_ic,
)
from ..criteria import convergence_study
from ..diagnostics import identity_residual
from ..dynamics import VoigtParams, nonlinear_term, pressure_field
from ..integration import IntegratorConfig, RunStatus, VoigtIntegrator
from ..integration.integrator import CEILING_SLACK
from ..spectral import (
    Grid,
    forward_transform,
    gradient,
    inverse_transform,
    is_solenoidal,
    l2_norm,
    leray_project,
    physical_l2_norm,
)
from .base import PropertySuite, SuiteResult
from .report import VerificationReport

logger = logging.getLogger(__name__)


class SpectralIdentitySuite(PropertySuite):
    """Transform round trips, Parseval, projector and vorticity identities."""

    def __init__(
        self,
        sizes: Sequence[int] = (8, 16, 32),
        fields_per_size: int = 100,
        tol: float = 1e-12,
    ):
        self.sizes = list(sizes)
        self.fields_per_size = fields_per_size
        self.tol = tol

    @property
    def name(self) -> str:
        return "spectral"

    def run(self) -> SuiteResult:
        worst: Dict[str, float] = {
            "identity_residual": 0.0,
            "round_trip": 0.0,
            "parseval": 0.0,
            "leray_idempotence": 0.0,
            "leray_gradient": 0.0,
            "pressure_balance": 0.0,
        }
        solenoidal = True
        for n in self.sizes:
            grid = Grid(n)
            rng = np.random.default_rng(n)
            for seed in range(self.fields_per_size):
                u = generate_ic(
                    InitialConditionSpec(
                        kind=InitialConditionKind.RANDOM_SOLENOIDAL, seed=seed
                    ),
                    grid,
                )
                worst["identity_residual"] = max(
                    worst["identity_residual"], identity_residual(u, grid)
                )

            samples = rng.standard_normal(grid.vector_shape)
            coeffs = forward_transform(samples, grid)
            back = inverse_transform(coeffs, grid)
            worst["round_trip"] = max(
                worst["round_trip"],
                float(np.max(np.abs(back - samples)) / np.max(np.abs(samples))),
            )
            physical = physical_l2_norm(samples)
            worst["parseval"] = max(
                worst["parseval"], abs(physical - l2_norm(coeffs)) / physical
            )

            projected = leray_project(coeffs, grid)
            solenoidal = solenoidal and is_solenoidal(projected, grid, self.tol)
            worst["leray_idempotence"] = max(
                worst["leray_idempotence"],
                l2_norm(leray_project(projected, grid) - projected) / l2_norm(projected),
            )
            potential = gradient(coeffs[0], grid)
            worst["leray_gradient"] = max(
                worst["leray_gradient"],
                l2_norm(leray_project(potential, grid)) / l2_norm(potential),
            )

            u = generate_ic(
                InitialConditionSpec(kind=InitialConditionKind.RANDOM_SOLENOIDAL), grid
            )
            N = nonlinear_term(u, grid)
            p = pressure_field(u, grid)
            balance = N - leray_project(N, grid) + gradient(p.coefficients, grid)
            worst["pressure_balance"] = max(
                worst["pressure_balance"], l2_norm(balance) / max(l2_norm(N), 1e-300)
            )

        checks = {name: value <= self.tol for name, value in worst.items()}
        checks["leray_solenoidal"] = solenoidal
        metrics: Dict[str, Any] = dict(worst)
        metrics["sizes"] = self.sizes
        metrics["fields_per_size"] = self.fields_per_size
        return self._result(checks, metrics)


def _taylor_green(n: int) -> Any:
    grid = Grid(n)
    return grid, generate_ic(InitialConditionSpec(), grid)


class ConservationSuite(PropertySuite):
    """alpha-energy equality for Euler-Voigt and energy equality for Euler.

    The Euler run's spectrum tail is reported as a metric, not checked.
    """

    def __init__(
        self,
        n: int = 32,
        alpha: float = 0.1,
        dt: float = 1e-3,
        t_final: float = 0.5,
        euler_t_final: float = 0.25,
        tol: float = 1e-8,
        tail_threshold: float = 1e-6,
    ):
        self.n = n
        self.alpha = alpha
        self.dt = dt
        self.t_final = t_final
        self.euler_t_final = euler_t_final
        self.tol = tol
        self.tail_threshold = tail_threshold

    @property
    def name(self) -> str:
        return "conservation"

    def run(self) -> SuiteResult:
        grid, u0 = _taylor_green(self.n)
        voigt = VoigtIntegrator(
            VoigtParams(self.alpha, grid),
            IntegratorConfig(dt=self.dt, t_final=self.t_final, sample_stride=100),
        ).run(u0).summary
        euler = VoigtIntegrator(
            VoigtParams(0.0, grid),
            IntegratorConfig(
                dt=self.dt,
                t_final=self.euler_t_final,
                sample_stride=100,
                tail_threshold=self.tail_threshold,
            ),
        ).run(u0).summary

        checks = {
            "voigt_valid": voigt.status == RunStatus.VALID,
            "voigt_drift": voigt.drift <= self.tol,
            "voigt_ceiling": voigt.M**2 <= voigt.alpha_energy0 + CEILING_SLACK,
            "euler_valid": euler.status == RunStatus.VALID,
            "euler_drift": euler.energy_drift <= self.tol,
        }
        metrics = {
            "n": self.n,
            "alpha": self.alpha,
            "drift": voigt.drift,
            "M": voigt.M,
            "alpha_energy0": voigt.alpha_energy0,
            "euler_energy_drift": euler.energy_drift,
            "euler_tail_fraction": euler.tail_fraction,
            "euler_resolved": euler.resolved,
        }
        logger.info(f"Conservation: drift={voigt.drift:.3e}")
        if not euler.resolved:
            logger.warning(
                f"Euler run under-resolved at T={self.euler_t_final!r}: tail fraction "
                f"{euler.tail_fraction:.3e}"
            )
        return self._result(checks, metrics)


class SteadyShearSuite(PropertySuite):
    """u0 = (sin 2 pi x3, 0, 0) is a steady solution for every alpha."""

    def __init__(
        self,
        n: int = 16,
        alphas: Sequence[float] = (0.0, 0.1),
        dt: float = 1e-2,
        t_final: float = 1.0,
        tol: float = 1e-12,
    ):
        self.n = n
        self.alphas = list(alphas)
        self.dt = dt
        self.t_final = t_final
        self.tol = tol

    @property
    def name(self) -> str:
        return "shear"

    def run(self) -> SuiteResult:
        grid = Grid(self.n)
        u0 = generate_ic(InitialConditionSpec(kind=InitialConditionKind.SHEAR), grid)
        gradient_norm = 2.0 * math.pi / math.sqrt(2.0)
        checks: Dict[str, bool] = {
            "nonlinear_term_zero": l2_norm(nonlinear_term(u0, grid)) <= self.tol
        }
        metrics: Dict[str, Any] = {"n": self.n}
        for alpha in self.alphas:
            outcome = VoigtIntegrator(
                VoigtParams(alpha, grid),
                IntegratorConfig(dt=self.dt, t_final=self.t_final),
            ).run(u0)
            change = l2_norm(outcome.state.u - u0)
            expected = alpha * gradient_norm
            M = outcome.summary.M
            if expected == 0.0:
                m_ok = M == 0.0
            else:
                m_ok = abs(M - expected) <= self.tol * expected
            checks[f"steady_alpha_{alpha!r}"] = change <= self.tol
            checks[f"M_alpha_{alpha!r}"] = m_ok
            metrics[f"change_alpha_{alpha!r}"] = change
            metrics[f"M_alpha_{alpha!r}"] = M
        return self._result(checks, metrics)


class ConvergenceSuite(PropertySuite):
    """Voigt solutions approach the Euler solution at least linearly in alpha.

    The error per mode scales like alpha^2 |k|^2 / (1 + alpha^2 |k|^2), so the
    consecutive ratios climb from below 2 toward 4 along the ladder. The fitted
    order is held to ``min_order`` and only the finest ratio to ``min_ratio``.
    """

    def __init__(
        self,
        n: int = 32,
        dt: float = 5e-4,
        t_final: float = 0.2,
        alphas: Sequence[float] = (0.1, 0.05, 0.025),
        min_ratio: float = 1.7,
        min_order: float = 0.9,
    ):
        self.n = n
        self.dt = dt
        self.t_final = t_final
        self.alphas = list(alphas)
        self.min_ratio = min_ratio
        self.min_order = min_order

    @property
    def name(self) -> str:
        return "convergence"

    def run(self) -> SuiteResult:
        grid, u0 = _taylor_green(self.n)
        table = convergence_study(u0, grid.n, self.t_final, self.alphas, self.dt)
        ratios = [r.ratio for r in table.rows if r.ratio is not None]
        errors = [r.error for r in table.rows if r.error is not None]
        checks = {
            "reference_valid": table.is_valid,
            "runs_valid": len(errors) == len(self.alphas),
            "finest_ratio": bool(ratios)
            and len(ratios) == len(self.alphas) - 1
            and ratios[-1] >= self.min_ratio,
            "order": table.order_fit is not None
            and table.order_fit.beta >= self.min_order,
            "errors_decrease": all(a > b for a, b in zip(errors, errors[1:])),
        }
        metrics: Dict[str, Any] = {
            "errors": errors,
            "ratios": ratios,
            "reference_tail_fraction": table.reference_tail_fraction,
        }
        if table.order_fit is not None:
            metrics["order"] = table.order_fit.beta
        return self._result(checks, metrics)


SUITES: Dict[str, Callable[[], PropertySuite]] = {
    "spectral": SpectralIdentitySuite,
    "conservation": ConservationSuite,
    "shear": SteadyShearSuite,
    "convergence": ConvergenceSuite,
}


def build_suites(name: str) -> List[PropertySuite]:
    """Suites selected by name, or all of them for ``"all"``.

    Raises:
        KeyError: For an unknown suite name
    """
    if name == "all":
        return [factory() for factory in SUITES.values()]
    return [SUITES[name]()]


def run_suites(name: str = "all") -> VerificationReport:
    results = []
    for suite in build_suites(name):
        logger.info(f"Running suite {suite.name}")
        results.append(suite.run())
    return VerificationReport(results=results)
