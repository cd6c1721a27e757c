"""Built-in property suites for the solver."""

from .base import PropertySuite, SuiteResult
from .report import VerificationReport
from .suites import (
    SUITES,
    ConservationSuite,
    ConvergenceSuite,
    SpectralIdentitySuite,
    SteadyShearSuite,
    build_suites,
    run_suites,
)

__all__ = [
    "SUITES",
    "ConservationSuite",
    "ConvergenceSuite",
    "PropertySuite",
    "SpectralIdentitySuite",
    "SteadyShearSuite",
    "SuiteResult",
    "VerificationReport",
    "build_suites",
    "run_suites",
]
