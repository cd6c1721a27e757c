"""Diagnostics: energy, enstrophy, alpha-energy, q and the energy spectrum."""

from .models import SERIES_COLUMNS, TimeSeriesRecord
from .observables import (
    alpha_energy,
    energy,
    energy_spectrum,
    enstrophy,
    identity_residual,
    q_value,
    sample_record,
    tail_fraction,
)

__all__ = [
    "SERIES_COLUMNS",
    "TimeSeriesRecord",
    "alpha_energy",
    "energy",
    "energy_spectrum",
    "enstrophy",
    "identity_residual",
    "q_value",
    "sample_record",
    "tail_fraction",
]
