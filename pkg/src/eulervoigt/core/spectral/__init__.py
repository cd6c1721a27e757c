"""
Spectral core: grid, transforms, spectral calculus, dealiasing, Leray
projection and Parseval norms on the periodic unit torus.
"""

from .models import (
    Grid,
    RealScalarField,
    RealVectorField,
    SpectralScalarField,
    SpectralVectorField,
    SPATIAL_AXES,
    TWO_PI,
)
from .operators import (
    check_hermitian,
    curl,
    dealias,
    divergence,
    forward_transform,
    grad_l2_norm,
    gradient,
    hermitian_residual,
    inverse_transform,
    is_solenoidal,
    l2_norm,
    laplacian,
    leray_project,
    physical_l2_norm,
    reflect,
    tree_sum,
)

__all__ = [
    "Grid",
    "RealScalarField",
    "RealVectorField",
    "SpectralScalarField",
    "SpectralVectorField",
    "SPATIAL_AXES",
    "TWO_PI",
    "check_hermitian",
    "curl",
    "dealias",
    "divergence",
    "forward_transform",
    "grad_l2_norm",
    "gradient",
    "hermitian_residual",
    "inverse_transform",
    "is_solenoidal",
    "l2_norm",
    "laplacian",
    "leray_project",
    "physical_l2_norm",
    "reflect",
    "tree_sum",
]
