"""
Binary checkpoints of a velocity state.

Layout (little-endian)::

    magic    4 bytes  b"EVCK"
    version  u32
    n        u32
    alpha    f64
    t        f64
    payload  3 * n^3 f64 physical samples, component-major, x1 fastest
"""

from __future__ import annotations

import logging
import struct
from dataclasses import dataclass
from pathlib import Path
from typing import Optional, Union

import numpy as np

from ..core.errors import CheckpointError
from ..core.spectral import (
    Grid,
    RealVectorField,
    SpectralVectorField,
    forward_transform,
    inverse_transform,
)

logger = logging.getLogger(__name__)

MAGIC = b"EVCK"
FORMAT_VERSION = 1
HEADER = struct.Struct("<4sIIdd")
_SAMPLE = np.dtype("<f8")


@dataclass(frozen=True)
class Checkpoint:
    """A physical-space velocity snapshot.

    Attributes:
        n: Grid size
        alpha: Regularization length of the run that produced the state
        t: Time of the state
        samples: Velocity samples, shape (3, n, n, n)
    """

    n: int
    alpha: float
    t: float
    samples: RealVectorField

    @classmethod
    def from_spectral(
        cls, u: SpectralVectorField, grid: Grid, alpha: float, t: float
    ) -> "Checkpoint":
        return cls(n=grid.n, alpha=alpha, t=t, samples=inverse_transform(u, grid))

    def to_spectral(self) -> SpectralVectorField:
        return forward_transform(self.samples, Grid(self.n))


def write_checkpoint(path: Union[str, Path], checkpoint: Checkpoint) -> Path:
    """Write a checkpoint file and return its path."""
    path = Path(path)
    header = HEADER.pack(
        MAGIC, FORMAT_VERSION, checkpoint.n, checkpoint.alpha, checkpoint.t
    )
    # (c, i3, i2, i1) in C order puts i1 fastest within each component.
    payload = np.ascontiguousarray(
        checkpoint.samples.transpose(0, 3, 2, 1), dtype=_SAMPLE
    ).tobytes()
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_bytes(header + payload)
    logger.debug(f"Wrote checkpoint {path} (n={checkpoint.n}, t={checkpoint.t!r})")
    return path


def read_checkpoint(
    path: Union[str, Path], expected_n: Optional[int] = None
) -> Checkpoint:
    """Read and validate a checkpoint file.

    Args:
        path: Checkpoint file
        expected_n: Grid size the caller requires, if any

    Raises:
        CheckpointError: On a bad magic or version, a grid mismatch, or a
            payload of the wrong size
    """
    path = Path(path)
    try:
        data = path.read_bytes()
    except OSError as e:
        raise CheckpointError(f"Cannot read checkpoint {path}: {e}") from e

    if len(data) < HEADER.size:
        raise CheckpointError(f"Checkpoint {path} is truncated: no complete header")
    magic, version, n, alpha, t = HEADER.unpack_from(data)
    if magic != MAGIC:
        raise CheckpointError(f"Checkpoint {path} has bad magic {magic!r}")
    if version != FORMAT_VERSION:
        raise CheckpointError(
            f"Checkpoint {path} has unsupported version {version}, "
            f"expected {FORMAT_VERSION}"
        )
    if expected_n is not None and n != expected_n:
        raise CheckpointError(
            f"Checkpoint {path} has n={n}, expected n={expected_n}"
        )

    payload = data[HEADER.size :]
    expected_bytes = 3 * n**3 * _SAMPLE.itemsize
    if len(payload) != expected_bytes:
        raise CheckpointError(
            f"Checkpoint {path} payload has {len(payload)} bytes, "
            f"expected {expected_bytes}"
        )

    raw = np.frombuffer(payload, dtype=_SAMPLE).reshape(3, n, n, n)
    samples = np.ascontiguousarray(raw.transpose(0, 3, 2, 1), dtype=np.float64)
    return Checkpoint(n=n, alpha=alpha, t=t, samples=samples)
