"""
Verification reporting to the console.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any, Dict, List

from tabulate import tabulate

from .base import SuiteResult


@dataclass
class VerificationReport:
    """Results of one ``verify`` invocation."""

    results: List[SuiteResult]

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.results)

    def pass_rate(self) -> float:
        if not self.results:
            return 0.0
        return sum(1 for r in self.results if r.passed) / len(self.results)

    def get_failures(self) -> List[SuiteResult]:
        return [r for r in self.results if not r.passed]

    def to_dict(self) -> Dict[str, Any]:
        return {
            "passed": self.passed,
            "results": [r.model_dump(mode="json") for r in self.results],
        }

    def format_summary(self) -> str:
        rows = [
            [r.suite, "PASS" if r.passed else "FAIL", f"{r.score:.2f}", r.reasoning]
            for r in self.results
        ]
        lines = [
            "=" * 80,
            "VERIFICATION REPORT",
            "=" * 80,
            tabulate(rows, headers=["Suite", "Status", "Score", "Details"]),
            "",
            f"Pass Rate: {self.pass_rate():.1%} ({len(self.results)} suites)",
        ]
        failures = self.get_failures()
        if failures:
            lines.append(f"FAILURES ({len(failures)}):")
            lines.extend(f"  [{r.suite}] {r.reasoning}" for r in failures)
        for result in self.results:
            if result.metrics:
                lines.append("")
                lines.append(f"[{result.suite}]")
                lines.append(
                    tabulate(
                        [[k, _format(v)] for k, v in result.metrics.items()],
                        headers=["Metric", "Value"],
                    )
                )
        lines.append("=" * 80)
        return "\n".join(lines)


def _format(value: Any) -> str:
    if isinstance(value, float):
        return f"{value:.6e}"
    if isinstance(value, list):
        return ", ".join(_format(v) for v in value)
    return str(value)
