"""Moments, densities and random-matrix checks for the J_{r,s,a} family."""

__version__ = "0.1.0"

from .moments import (
    ModelParams,
    MomentSequence,
    ParameterError,
    fuss_catalan,
    jacobi_eval,
    moment_derivative,
    moment_jacobi,
    moment_series,
    raney,
)
from .numkit import FormalSeries, binomial_general, pochhammer

__all__ = [
    "FormalSeries",
    "ModelParams",
    "MomentSequence",
    "ParameterError",
    "binomial_general",
    "fuss_catalan",
    "jacobi_eval",
    "moment_derivative",
    "moment_jacobi",
    "moment_series",
    "pochhammer",
    "raney",
]
