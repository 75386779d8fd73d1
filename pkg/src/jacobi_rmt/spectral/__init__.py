"""Spectral curve, physical branch, density and quadrature."""

from .branch import BranchValue, TrackingError, branch_at
from .density import (
    DensityError,
    DensitySample,
    density,
    density_grid,
    quadrature_moment,
    quadrature_moments,
)
from .roots import ConvergenceError, poly_roots
from .support import SupportData, endpoints

__all__ = [
    "BranchValue",
    "ConvergenceError",
    "DensityError",
    "DensitySample",
    "SupportData",
    "TrackingError",
    "branch_at",
    "density",
    "density_grid",
    "endpoints",
    "poly_roots",
    "quadrature_moment",
    "quadrature_moments",
]
