"""Density of J_{r,s,a} from the jump of w_1 across the cut, and its moments."""

from __future__ import annotations

import bisect
import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from ..moments import ModelParams
from .branch import LogPath, Tracker, TrackingError, branch_at
from .equation import SpectralCurve
from .support import endpoints
from .tanhsinh import integrate

NEGATIVE_TOL = 1e-10
# closer than this (relative) to x_star the density is below 1e-6 of its scale
EDGE_CUTOFF = 1e-13


class DensityError(ArithmeticError):
    """The computed density is negative: the wrong root was tracked."""


@dataclass(frozen=True)
class DensitySample:
    x: float
    rho: float
    w_plus: complex


@lru_cache(maxsize=256)
def density_sign(params: ModelParams) -> int:
    """+1 or -1 such that ``sign * Im(w_+(x)) / (pi x)`` is positive.

    Determined once at the midpoint of the support; continuity of the
    density carries the sign to the whole cut.
    """
    xs = endpoints(params).x_star
    w = branch_at(params, 0.5 * xs, side=1).w
    if w.imag == 0:
        raise DensityError("no jump across the cut at the midpoint")
    return 1 if w.imag > 0 else -1


def _rho(sign: int, w: complex, x: float) -> float:
    rho = sign * w.imag / (math.pi * x)
    if rho < -NEGATIVE_TOL:
        raise DensityError(f"negative density {rho:.3e} at x={x}")
    return max(rho, 0.0)


def density(params: ModelParams, x: float) -> DensitySample:
    """``rho(x) = |Im w_+(x)| / (pi x)`` with the sign fixed by :func:`density_sign`."""
    params.require_density()
    xs = endpoints(params).x_star
    x = float(x)
    if not 0.0 < x < xs:
        raise ValueError(f"x={x} outside the open support (0, {xs})")
    w = branch_at(params, x, side=1).w
    return DensitySample(x, _rho(density_sign(params), w, x), w)


class CutSweep:
    """Boundary values ``w_+(x)`` on ``(0, x_star)`` with reuse between calls.

    One value (the midpoint) comes from :func:`branch_at`; every other point
    is reached by continuing along the real segment from its nearest known
    neighbour.  The root is simple on the open cut, so this is ordinary
    analytic continuation.  Geometric steps toward ``0`` and toward
    ``x_star`` resolve the algebraic behaviour at both ends.
    """

    def __init__(self, params: ModelParams):
        params.require_density()
        self.params = params
        self.x_star = endpoints(params).x_star
        self.mid = 0.5 * self.x_star
        self.sign = density_sign(params)
        self._tracker = Tracker(SpectralCurve(params))
        w_mid = branch_at(params, self.mid, side=1).w
        self._xs = [self.mid]
        self._ws = [w_mid]

    def _path(self, x_from: float, x_to: float):
        if x_to < self.mid or (x_to == self.mid and x_from < self.mid):
            return LogPath(0.0, 1.0, x_from, x_to)
        return LogPath(self.x_star, -1.0, x_from, x_to)

    def _distance(self, a: float, b: float) -> float:
        if b < self.mid:
            return abs(math.log(a / b))
        return abs(math.log((self.x_star - a) / (self.x_star - b)))

    def w_plus(self, x: float) -> complex:
        i = bisect.bisect_left(self._xs, x)
        if i < len(self._xs) and self._xs[i] == x:
            return self._ws[i]
        cands = [j for j in (i - 1, i) if 0 <= j < len(self._xs)]
        j = min(cands, key=lambda j: self._distance(self._xs[j], x))
        w, _ = self._tracker.run(self._path(self._xs[j], x), self._ws[j])
        self._xs.insert(i, x)
        self._ws.insert(i, w)
        return w

    def values(self, xs) -> np.ndarray:
        """``w_+`` at each point, visiting points outward from the midpoint."""
        xs = np.asarray(xs, dtype=float)
        out = np.empty(xs.shape, dtype=complex)
        order = np.argsort(np.abs(xs - self.mid), kind="stable")
        for k in order:
            out[k] = self.w_plus(float(xs[k]))
        return out

    def rho(self, xs) -> np.ndarray:
        xs = np.asarray(xs, dtype=float)
        out = np.zeros(xs.shape)
        inside = (xs > 0) & (xs < self.x_star * (1 - EDGE_CUTOFF))
        ws = self.values(xs[inside])
        out[inside] = [_rho(self.sign, w, x) for w, x in zip(ws, xs[inside])]
        return out


@lru_cache(maxsize=64)
def _sweep(params: ModelParams) -> CutSweep:
    return CutSweep(params)


def density_grid(params: ModelParams, xs) -> list[DensitySample]:
    """Density samples at many interior points (shares one sweep per params)."""
    sweep = _sweep(params)
    xs = np.asarray(xs, dtype=float)
    if np.any((xs <= 0) | (xs >= sweep.x_star)):
        raise ValueError("grid points must lie in the open support")
    ws = sweep.values(xs)
    return [DensitySample(float(x), _rho(sweep.sign, w, float(x)), complex(w))
            for x, w in zip(xs, ws)]


@lru_cache(maxsize=64)
def _moment_table(params: ModelParams, n_max: int, rtol: float) -> tuple[float, ...]:
    sweep = _sweep(params)
    powers = np.arange(n_max + 1)

    def integrand(x):
        rho = sweep.rho(x)
        return rho[:, None] * x[:, None] ** powers[None, :]

    res = integrate(integrand, 0.0, sweep.x_star, rtol=rtol)
    return tuple(float(v) for v in res.value)


def quadrature_moments(params: ModelParams, n_max: int, rtol: float = 1e-11) -> list[float]:
    """``[int_0^{x*} x^n rho(x) dx for n = 0..n_max]`` by tanh-sinh quadrature."""
    params.require_density()
    if n_max < 0:
        raise ValueError("n_max must be nonnegative")
    return list(_moment_table(params, int(n_max), rtol))


def quadrature_moment(params: ModelParams, n: int) -> float:
    """``int_0^{x*} x^n rho(x) dx``; the density is shared across ``n``."""
    # a table up to n=10 costs the same density evaluations as a single moment
    return quadrature_moments(params, max(int(n), 10))[n]


__all__ = [
    "CutSweep",
    "DensityError",
    "DensitySample",
    "TrackingError",
    "density",
    "density_grid",
    "density_sign",
    "quadrature_moment",
    "quadrature_moments",
]
