"""Double-exponential (tanh-sinh) quadrature on a finite interval.

Nodes are parametrized by ``t`` with ``x = lo + L / (1 + exp(-pi sinh t))``,
which is the usual ``tanh(pi/2 sinh t)`` map written so that the distance
to either endpoint is computed without cancellation.  Levels halve the step
``h`` and reuse every previously evaluated node.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .roots import ConvergenceError


@dataclass(frozen=True)
class QuadratureResult:
    value: np.ndarray
    error: np.ndarray
    level: int
    evaluations: int


def _nodes(t: np.ndarray, lo: float, hi: float):
    """Abscissae and Jacobian weights ``dx/dt`` for parameter values ``t``."""
    length = hi - lo
    e = np.exp(-np.pi * np.sinh(t))
    frac_lo = 1.0 / (1.0 + e)
    frac_hi = e / (1.0 + e)
    with np.errstate(over="ignore"):
        jac = length * np.pi * np.cosh(t) / (e + 2.0 + 1.0 / e)
    jac = np.where(np.isfinite(jac), jac, 0.0)
    x = np.where(t <= 0, lo + length * frac_lo, hi - length * frac_hi)
    # nodes that round onto an endpoint carry no weight and may be singular
    keep = (x > lo) & (x < hi)
    return x[keep], jac[keep]


def integrate(f, lo: float, hi: float, *, rtol: float = 1e-10, atol: float = 0.0,
              t_max: float = 5.8, h0: float = 0.5, max_level: int = 8,
              min_level: int = 3) -> QuadratureResult:
    """Integrate ``f`` over ``[lo, hi]``.

    ``f`` is called with a 1-d array of abscissae and must return an array
    whose first axis matches; trailing axes are integrated independently
    (handy for many moments of one density).  Converged once the change
    between two levels is below ``max(atol, rtol * |value|)`` componentwise.

    ``t_max = 5.8`` reaches within ``1e-225 (hi - lo)`` of the left endpoint,
    enough for integrable power singularities as strong as ``x^{-0.9}``
    when ``lo = 0``.  Near ``hi`` abscissae are only resolved to about
    ``eps * |hi|``, so a singularity there limits the attainable accuracy;
    integrands that vanish at ``hi`` (densities at a soft edge) are fine.
    """
    if not hi > lo:
        raise ValueError("need hi > lo")
    n0 = int(math.floor(t_max / h0))
    t = np.arange(-n0, n0 + 1) * h0
    x, jac = _nodes(t, lo, hi)
    vals = np.asarray(f(x), dtype=float)
    evaluations = len(x)
    total = np.tensordot(jac, vals, axes=(0, 0))
    estimate = h0 * total
    h = h0
    prev = None
    err = np.full(np.shape(estimate), np.inf)
    for level in range(1, max_level + 1):
        h /= 2
        n = int(math.floor(t_max / h))
        k = np.arange(-n, n + 1)
        t_new = k[k % 2 != 0] * h
        x, jac = _nodes(t_new, lo, hi)
        vals = np.asarray(f(x), dtype=float)
        evaluations += len(x)
        total = total + np.tensordot(jac, vals, axes=(0, 0))
        prev, estimate = estimate, h * total
        err = np.abs(estimate - prev)
        if level >= min_level and np.all(err <= np.maximum(atol, rtol * np.abs(estimate))):
            return QuadratureResult(estimate, err, level, evaluations)
    raise ConvergenceError(
        f"tanh-sinh did not converge by level {max_level} (max change {np.max(err):.3e})"
    )
