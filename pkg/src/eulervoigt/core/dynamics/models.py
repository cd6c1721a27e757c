"""Parameter and diagnostic types for the Euler-Voigt right-hand side."""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import cached_property

import numpy as np
import numpy.typing as npt

from ..errors import FieldValidationError
from ..spectral import Grid, RealScalarField, SpectralScalarField, inverse_transform


@dataclass(frozen=True)
class VoigtParams:
    """Regularization length alpha and its Helmholtz weights on a grid.

    The weights w(k) = 1 / (1 + alpha^2 |k|^2) invert the Voigt operator
    (I - alpha^2 Laplacian) mode by mode. alpha = 0 gives w = 1 (Euler).
    """

    alpha: float
    grid: Grid

    def __post_init__(self) -> None:
        if not math.isfinite(self.alpha) or self.alpha < 0.0:
            raise FieldValidationError(
                f"alpha must be finite and non-negative, got {self.alpha}"
            )

    @cached_property
    def weights(self) -> npt.NDArray[np.float64]:
        return 1.0 / (1.0 + self.alpha**2 * self.grid.derivative_k_squared)

    @property
    def is_euler(self) -> bool:
        return self.alpha == 0.0


@dataclass(frozen=True)
class PressureDiagnostic:
    """Pressure recovered from a velocity field, defined up to a constant."""

    coefficients: SpectralScalarField
    grid: Grid

    def to_physical(self) -> RealScalarField:
        return inverse_transform(self.coefficients, self.grid)
