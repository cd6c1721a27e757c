"""
Grid and field models for the spectral core.

Fields are plain numpy arrays indexed ``[component, i1, i2, i3]`` with
``x_j = i_j / n``; spectral arrays use the same index layout with the mode
``m_j = fftfreq(n, 1/n)[i_j]``. The grid owns every wavevector table so the
operators stay pure functions of ``(field, grid)``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import cached_property
from typing import Tuple

import numpy as np
import numpy.typing as npt

from ..errors import FieldValidationError

RealScalarField = npt.NDArray[np.float64]
RealVectorField = npt.NDArray[np.float64]
SpectralScalarField = npt.NDArray[np.complex128]
SpectralVectorField = npt.NDArray[np.complex128]

#: Spatial axes of every field array (scalar or vector).
SPATIAL_AXES: Tuple[int, int, int] = (-3, -2, -1)

TWO_PI = 2.0 * math.pi


@dataclass(frozen=True)
class Grid:
    """Uniform collocation grid on the unit torus [0,1)^3.

    Attributes:
        n: Points per dimension (even, at least 8)
    """

    n: int

    def __post_init__(self) -> None:
        if self.n < 8 or self.n % 2 != 0:
            raise FieldValidationError(
                f"Grid size must be an even integer >= 8, got {self.n}"
            )

    @property
    def shape(self) -> Tuple[int, int, int]:
        return (self.n, self.n, self.n)

    @property
    def vector_shape(self) -> Tuple[int, int, int, int]:
        return (3, self.n, self.n, self.n)

    @property
    def spacing(self) -> float:
        """Grid spacing dx = 1/n."""
        return 1.0 / self.n

    @property
    def dealias_cutoff(self) -> float:
        """Largest kept |m_i| under the 2/3 rule."""
        return self.n / 3.0

    @cached_property
    def mode_numbers(self) -> npt.NDArray[np.int64]:
        """Integer mode triples m, shape (3, n, n, n)."""
        m = np.fft.fftfreq(self.n, 1.0 / self.n).round().astype(np.int64)
        return np.array(np.meshgrid(m, m, m, indexing="ij"))

    @cached_property
    def wavevectors(self) -> npt.NDArray[np.float64]:
        """Wavevectors k = 2*pi*m."""
        return TWO_PI * self.mode_numbers.astype(np.float64)

    @cached_property
    def derivative_wavevectors(self) -> npt.NDArray[np.float64]:
        """Wavevectors used by odd-order operators.

        The Nyquist component m_j = -n/2 has no conjugate partner, so it is
        zeroed to keep derivatives of real fields real.
        """
        kd = self.wavevectors.copy()
        kd[self.mode_numbers == -self.n // 2] = 0.0
        return kd

    @cached_property
    def derivative_k_squared(self) -> npt.NDArray[np.float64]:
        """|k|^2 of the derivative wavevectors, used by every norm and by the Voigt weights."""
        return np.sum(self.derivative_wavevectors**2, axis=0)

    @cached_property
    def mode_magnitude(self) -> npt.NDArray[np.float64]:
        """|m| for every mode."""
        return np.sqrt(np.sum(self.mode_numbers.astype(np.float64) ** 2, axis=0))

    @cached_property
    def dealias_mask(self) -> npt.NDArray[np.bool_]:
        """True where max_j |m_j| <= n/3."""
        return np.max(np.abs(self.mode_numbers), axis=0) <= self.dealias_cutoff

    @cached_property
    def reflection_index(self) -> npt.NDArray[np.int64]:
        """Index of -m along one axis."""
        return (-np.arange(self.n)) % self.n

    @cached_property
    def points(self) -> npt.NDArray[np.float64]:
        """Collocation points x_j = i_j / n, shape (3, n, n, n)."""
        x = np.arange(self.n, dtype=np.float64) / self.n
        return np.array(np.meshgrid(x, x, x, indexing="ij"))

    def mode_at(self, index: Tuple[int, ...]) -> Tuple[int, int, int]:
        """Mode triple m stored at a spatial index (i1, i2, i3)."""
        i1, i2, i3 = index[-3:]
        m = self.mode_numbers
        return (int(m[0, i1, i2, i3]), int(m[1, i1, i2, i3]), int(m[2, i1, i2, i3]))

    def index_of(self, mode: Tuple[int, int, int]) -> Tuple[int, int, int]:
        """Array index holding the mode triple m."""
        half = self.n // 2
        for mj in mode:
            if not -half <= mj < half:
                raise FieldValidationError(
                    f"Mode {mode} is outside [-{half}, {half}) for n={self.n}"
                )
        return (mode[0] % self.n, mode[1] % self.n, mode[2] % self.n)
