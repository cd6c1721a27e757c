"""Voigt dynamics: the Euler-Voigt right-hand side and pressure diagnostic."""

from .models import PressureDiagnostic, VoigtParams
from .rhs import nonlinear_term, pressure_field, voigt_rhs

__all__ = [
    "PressureDiagnostic",
    "VoigtParams",
    "nonlinear_term",
    "pressure_field",
    "voigt_rhs",
]
