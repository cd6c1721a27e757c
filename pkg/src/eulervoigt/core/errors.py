"""
Exception classes for the Euler-Voigt solver.

This module defines all custom exceptions used throughout the package.
"""

from typing import Optional, Tuple


class VoigtError(Exception):
    """Base exception for the solver and its harness."""

    pass


class FieldValidationError(VoigtError):
    """A field has the wrong shape or non-finite samples."""

    def __init__(self, message: str, index: Optional[Tuple[int, ...]] = None):
        super().__init__(message)
        self.index = index


class SymmetryError(VoigtError):
    """Spectral coefficients are not Hermitian-symmetric."""

    def __init__(self, message: str, mode: Optional[Tuple[int, ...]] = None):
        super().__init__(message)
        self.mode = mode


class NumericalBlowupError(VoigtError):
    """The discrete state or a pseudospectral product became non-finite."""

    def __init__(
        self, message: str, step: Optional[int] = None, t: Optional[float] = None
    ):
        super().__init__(message)
        self.step = step
        self.t = t


class ConservationBreachError(VoigtError):
    """Relative alpha-energy drift exceeded the abort tolerance."""

    def __init__(self, message: str, drift: float = float("nan")):
        super().__init__(message)
        self.drift = drift


class BandLimitError(VoigtError):
    """Initial-condition parameters exceed the dealiased band n/3."""

    pass


class CheckpointError(VoigtError):
    """Checkpoint file is malformed or does not match the expected grid."""

    pass


class ConfigError(VoigtError):
    """Configuration could not be read or failed validation."""

    pass


class FitError(VoigtError):
    """Power-law regression input is degenerate."""

    pass


class SweepError(VoigtError):
    """A sweep produced no VALID run."""

    pass


class ConsistencyError(VoigtError):
    """An internal invariant of the criterion harness was violated."""

    pass
