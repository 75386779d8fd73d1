"""Support endpoints of J_{r,s,a}."""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

from ..moments import ModelParams, ParameterError


@dataclass(frozen=True)
class SupportData:
    """Branch-point data: the support is ``[0, x_star]``.

    ``w_star``/``w_tilde`` are the roots of the discriminant quadratic and
    ``x_star``/``x_tilde`` the matching values of ``x``.  ``x_tilde`` is
    ``None`` when its defining expression degenerates (this happens exactly
    for ``s = 0``, where ``w_tilde = -1`` is not a branch point).
    ``x_tilde`` can land inside ``(0, x_star)`` (r=3, s=1, a=2 gives about
    2.823), but only as a branch point of another sheet.
    """

    w_star: float
    x_star: float
    w_tilde: float
    x_tilde: float | None


def discriminant_quadratic(params: ModelParams, w: float) -> float:
    """``w((s+1)w - (as-1)) - (r+1)(w-a)(w+1)``; vanishes at w_star and w_tilde."""
    r, s, a = params.r, params.s, float(params.a)
    return w * ((s + 1) * w - (a * s - 1)) - (r + 1) * (w - a) * (w + 1)


def x_of_branch_w(params: ModelParams, w: float) -> float | None:
    """``x = ((r+1)/(s+1)) w^r / ((w+1)^{s-1} (w - (as-1)/(s+1)))``, or None if degenerate."""
    r, s, a = params.r, params.s, float(params.a)
    den = (s + 1) * w - (a * s - 1)
    tol = 1e-12 * max(1.0, abs(w))
    if abs(den) <= tol:
        return None
    if s != 1 and abs(w + 1) <= tol:
        return None
    return (r + 1) * w ** r * (w + 1) ** (1 - s) / den


@lru_cache(maxsize=256)
def endpoints(params: ModelParams) -> SupportData:
    """Roots of the discriminant quadratic and the branch points they map to.

    ``w_star`` is the root taken with ``+sqrt``; ``w_tilde`` follows from
    the product of the roots to avoid cancellation.
    """
    if not isinstance(params, ModelParams):
        raise TypeError("expected ModelParams")
    params.require_density()
    r, s, a = params.r, params.s, float(params.a)
    if a <= 0:
        raise ParameterError("a must be positive")
    b = a * (r + 1 - s) - r
    disc = b * b + 4 * a * (r + 1) * (r - s)
    w_star = (b + math.sqrt(disc)) / (2 * (r - s))
    w_tilde = -(r + 1) * a / ((r - s) * w_star)
    x_star = x_of_branch_w(params, w_star)
    if x_star is None or not x_star > 0:
        raise ArithmeticError(f"degenerate right endpoint for {params}")
    x_tilde = x_of_branch_w(params, w_tilde)
    return SupportData(w_star, x_star, w_tilde, x_tilde)
