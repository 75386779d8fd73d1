"""Analytic continuation of the physical branch w_1(x).

The branch is pinned at the real anchor ``x0 = 2 x_star``, where it is the
unique root of the curve in ``(a, w_star)``, and carried to any target by
predictor-corrector path tracking.  Each step:

1. predicts with an Euler step of ``dw/dt = -P_x/P_w * dx/dt`` taken in
   ``log w`` (exact for the power laws near ``x = 0``);
2. corrects with Newton's method on ``P(., x)``;
3. accepts only if the corrector stayed in the basin of the predicted root,
   i.e. the full root set (Aberth) has no other root closer than four times
   the correction.  Otherwise the step is halved.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numpy as np
from scipy.optimize import brentq

from ..moments import ModelParams
from .equation import SpectralCurve
from .roots import EPS, ConvergenceError, poly_roots
from .support import endpoints


class TrackingError(ArithmeticError):
    """Path tracking failed (path hits a branch point or steps underflow)."""


@dataclass(frozen=True)
class BranchValue:
    """``w`` on the physical branch at ``x`` with ``residual = |P(w, x)|``."""

    x: complex
    w: complex
    residual: float


class LinearPath:
    def __init__(self, start: complex, end: complex):
        self.start, self.end = complex(start), complex(end)
        self.t0, self.t1 = 0.0, 1.0

    def x(self, t: float) -> complex:
        if t == 1.0:
            return self.end
        return self.start + t * (self.end - self.start)

    def dxdt(self, t: float) -> complex:
        return self.end - self.start


class LogPath:
    """``x = center + direction * exp(t)`` between two points on a ray from ``center``.

    Used along the real axis, where geometric steps follow the scale of the
    root near the branch points ``0`` and ``x_star``.
    """

    def __init__(self, center: float, direction: complex, start: complex, end: complex):
        self.center, self.direction = center, complex(direction)
        self.start, self.end = complex(start), complex(end)
        self.t0 = math.log(abs(self.start - center))
        self.t1 = math.log(abs(self.end - center))

    def x(self, t: float) -> complex:
        if t == self.t1:
            return self.end
        if t == self.t0:
            return self.start
        return self.center + self.direction * math.exp(t)

    def dxdt(self, t: float) -> complex:
        return self.direction * math.exp(t)


class Tracker:
    """Predictor-corrector continuation of one root of a :class:`SpectralCurve`."""

    def __init__(self, curve: SpectralCurve, *, newton_iters: int = 12,
                 min_step_rel: float = 1e-13, max_steps: int = 200_000):
        self.curve = curve
        self.newton_iters = newton_iters
        self.min_step_rel = min_step_rel
        self.max_steps = max_steps
        self.steps = 0

    def newton(self, w: complex, x: complex):
        c = self.curve
        for _ in range(self.newton_iters):
            dw = c.value(w, x) / c.d_dw(w, x)
            if not cmath.isfinite(dw):
                return w, False
            w = w - dw
            # near-coalescing roots cap the attainable step size, not the residual
            if abs(dw) <= 8 * EPS * abs(w) or c.relative_residual(w, x) <= 4 * EPS:
                return w, True
        return w, False

    def in_basin(self, w_old: complex, w_pred: complex, w_corr: complex, x: complex) -> bool:
        """Accept a step only if it cannot have switched roots.

        No other root may lie within four corrector lengths of the result,
        and either the root moved less than half the distance to its nearest
        neighbour or the predictor was accurate to 0.1% of the step taken.
        """
        sigma = abs(w_corr)
        if sigma == 0:
            return False
        try:
            roots = poly_roots(self.curve.scaled_coefficients(x, sigma), tol=1e-10) * sigma
        except ConvergenceError:
            return False
        d = np.abs(roots - w_corr)
        i = int(np.argmin(d))
        if d[i] > 1e-6 * sigma:
            return False
        others = np.delete(d, i)
        sep = float(others.min()) if len(others) else math.inf
        corr = abs(w_pred - w_corr)
        if corr > 0.25 * sep:
            return False
        moved = abs(w_corr - w_old)
        return moved <= 0.5 * sep or corr <= 1e-3 * moved

    def run(self, path, w: complex, h: float | None = None):
        """Carry ``w`` from ``path.t0`` to ``path.t1``; returns ``(w, last_step)``."""
        t, t_end = path.t0, path.t1
        span = t_end - t
        if span == 0:
            return w, h
        direction = 1.0 if span > 0 else -1.0
        if h is None:
            h = abs(span) / 8
        h = min(abs(h), abs(span))
        min_h = self.min_step_rel * max(1.0, abs(t), abs(t_end))
        c = self.curve
        while (t_end - t) * direction > 0:
            self.steps += 1
            if self.steps > self.max_steps:
                raise TrackingError("step budget exhausted")
            hh = min(h, abs(t_end - t))
            t_new = t_end if hh == abs(t_end - t) else t + direction * hh
            x_old, x_new = path.x(t), path.x(t_new)
            slope = -c.d_dx(w, x_old) / c.d_dw(w, x_old) * path.dxdt(t)
            incr = (t_new - t) * slope
            if w != 0 and abs(incr) < 50 * abs(w):
                w_pred = w * cmath.exp(incr / w)
            else:
                w_pred = w + incr
            ok = cmath.isfinite(w_pred)
            if ok:
                w_corr, ok = self.newton(w_pred, x_new)
            if ok:
                ok = self.in_basin(w, w_pred, w_corr, x_new)
            if ok:
                t, w = t_new, w_corr
                h = 2 * hh
            else:
                h = hh / 2
                if h < min_h:
                    raise TrackingError(
                        f"step size underflow near x={x_new}; path too close to a branch point"
                    )
        return w, h


def anchor(params: ModelParams) -> tuple[float, float]:
    """``(x0, w0)``: ``x0 = 2 x_star`` and the unique root of the curve in ``(a, w_star)``."""
    sup = endpoints(params)
    curve = SpectralCurve(params)
    x0 = 2 * sup.x_star
    w0 = brentq(lambda w: curve.value(w, x0), curve.a, sup.w_star, xtol=1e-15, rtol=4 * EPS)
    return x0, w0


def _waypoints(x0: float, target: complex, sign: float, height: float) -> list[complex]:
    if abs(target.imag) >= height:
        pts = [x0, complex(x0, target.imag), target]
    else:
        h = sign * height
        pts = [x0, complex(x0, h), complex(target.real, h), target]
    out = [complex(pts[0])]
    for p in pts[1:]:
        if p != out[-1]:
            out.append(complex(p))
    return out


def branch_at(params: ModelParams, x, side: int | None = None) -> BranchValue:
    """Value of the physical branch ``w_1`` at ``x``.

    For real ``x`` inside the cut ``(0, x_star)`` pass ``side=+1`` (limit
    from the upper half plane, ``w_+``) or ``side=-1`` (``w_-``).  The root
    is simple there, so the path lands on the cut directly.
    """
    params.require_density()
    sup = endpoints(params)
    xs = sup.x_star
    x = complex(x)
    if not cmath.isfinite(x):
        raise ValueError("x must be finite")
    curve = SpectralCurve(params)
    tracker = Tracker(curve)
    x0, w0 = anchor(params)

    on_axis = x.imag == 0
    if on_axis and x.real in (0.0, xs):
        raise TrackingError(f"x={x.real} is a branch point")
    if on_axis and x.real > xs:
        path = LogPath(0.0, 1.0, x0, x)
        w, _ = tracker.run(path, complex(w0))
        w = complex(w.real, 0.0) if abs(w.imag) <= 1e-13 * abs(w) else w
    else:
        if on_axis and 0 < x.real < xs:
            if side not in (1, -1):
                raise ValueError("x lies on the cut; pass side=+1 or side=-1")
            sign = float(side)
        elif on_axis:
            sign = 1.0
        else:
            sign = 1.0 if x.imag > 0 else -1.0
        pts = _waypoints(x0, x, sign, 0.5 * xs)
        w, h = complex(w0), None
        for p, q in zip(pts[:-1], pts[1:]):
            w, h = tracker.run(LinearPath(p, q), w, h)
    return BranchValue(x, w, curve.residual(w, x))
