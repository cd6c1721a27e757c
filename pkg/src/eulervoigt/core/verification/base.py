"""
Core abstractions for built-in property suites.

A suite runs a self-contained numerical experiment and reports whether the
solver meets a known property of the equations.
"""

from abc import ABC, abstractmethod
from typing import Any, Dict

from pydantic import BaseModel, Field


class SuiteResult(BaseModel):
    """Result of one property suite.

    Attributes:
        suite: Name of the suite
        passed: Whether every check in the suite passed
        score: Fraction of checks that passed, 0.0 to 1.0
        reasoning: Explanation of the outcome
        metrics: Measured quantities behind the checks
    """

    suite: str
    passed: bool
    score: float = Field(ge=0.0, le=1.0)
    reasoning: str
    metrics: Dict[str, Any] = Field(default_factory=dict)


class PropertySuite(ABC):
    """Base class for property suites."""

    @property
    @abstractmethod
    def name(self) -> str:
        """Name used on the command line."""
        pass

    @abstractmethod
    def run(self) -> SuiteResult:
        """Run the experiment and its checks."""
        pass

    def _result(self, checks: Dict[str, bool], metrics: Dict[str, Any]) -> SuiteResult:
        failed = [name for name, ok in checks.items() if not ok]
        score = (len(checks) - len(failed)) / len(checks) if checks else 1.0
        if failed:
            reasoning = f"Failed checks: {', '.join(failed)}"
        else:
            reasoning = f"All {len(checks)} checks passed"
        return SuiteResult(
            suite=self.name,
            passed=not failed,
            score=score,
            reasoning=reasoning,
            metrics=metrics,
        )
