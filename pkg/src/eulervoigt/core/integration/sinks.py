"""
Diagnostics sinks receiving sampled TimeSeriesRecords from the integration loop.
"""

import json
import logging
from abc import ABC, abstractmethod
from typing import List, Sequence

from ..diagnostics import TimeSeriesRecord

logger = logging.getLogger(__name__)


class DiagnosticsSink(ABC):
    """Receives records synchronously from the integration loop."""

    @abstractmethod
    def emit(self, record: TimeSeriesRecord) -> None:
        """Accept one sampled record."""
        pass

    def close(self) -> None:
        """Flush and release resources. Called once when the run ends."""
        pass


class ListSink(DiagnosticsSink):
    """Keeps records in memory."""

    def __init__(self) -> None:
        self.records: List[TimeSeriesRecord] = []

    def emit(self, record: TimeSeriesRecord) -> None:
        self.records.append(record)


class LoggingSink(DiagnosticsSink):
    """Writes records to the Python logger as single-line JSON.

    Example:
        sink = LoggingSink(alpha=0.1)
        integrate(u0, params, config, sink)
    """

    def __init__(self, alpha: float, log_level: int = logging.DEBUG):
        self.alpha = alpha
        self.log_level = log_level

    def emit(self, record: TimeSeriesRecord) -> None:
        record_json = json.dumps(record.model_dump(), separators=(",", ":"))
        logger.log(self.log_level, f"[SERIES] alpha={self.alpha!r} | {record_json}")


class CompositeSink(DiagnosticsSink):
    """Fans records out to several sinks in order."""

    def __init__(self, sinks: Sequence[DiagnosticsSink]):
        self.sinks = list(sinks)

    def emit(self, record: TimeSeriesRecord) -> None:
        for sink in self.sinks:
            sink.emit(record)

    def close(self) -> None:
        for sink in self.sinks:
            sink.close()
