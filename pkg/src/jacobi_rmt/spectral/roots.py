"""Simultaneous polynomial root finding (Aberth-Ehrlich iteration)."""

from __future__ import annotations

import numpy as np

EPS = np.finfo(float).eps


class ConvergenceError(ArithmeticError):
    """An iterative numerical method did not converge."""


def _horner(coeffs: np.ndarray, z: np.ndarray):
    """Value, derivative and the absolute-value bound sum |c_k| |z|^k."""
    p = np.full_like(z, coeffs[0])
    dp = np.zeros_like(z)
    bound = np.full(z.shape, abs(coeffs[0]), dtype=float)
    az = np.abs(z)
    for c in coeffs[1:]:
        dp = dp * z + p
        p = p * z + c
        bound = bound * az + abs(c)
    return p, dp, bound


def inclusion_radii(coeffs, roots) -> np.ndarray:
    """Radii of disks around each approximation that each contain a root.

    Uses the Weierstrass correction ``W_i = p(z_i) / (c_0 prod_{j!=i} (z_i - z_j))``;
    the disk of radius ``n |W_i|`` about ``z_i`` contains a root of ``p``.
    For coincident approximations the radius is infinite.
    """
    coeffs = np.asarray(coeffs, dtype=complex)
    z = np.asarray(roots, dtype=complex)
    n = len(z)
    p, _, _ = _horner(coeffs, z)
    diff = z[:, None] - z[None, :]
    np.fill_diagonal(diff, 1.0)
    with np.errstate(divide="ignore", invalid="ignore"):
        w = p / (coeffs[0] * np.prod(diff, axis=1))
    rad = n * np.abs(w)
    rad[~np.isfinite(rad)] = np.inf
    return rad


def relative_residuals(coeffs, roots) -> np.ndarray:
    """``|p(z)| / sum |c_k| |z|^k`` for each root: the backward error."""
    coeffs = np.asarray(coeffs, dtype=complex)
    z = np.asarray(roots, dtype=complex)
    p, _, bound = _horner(coeffs, z)
    with np.errstate(invalid="ignore", divide="ignore"):
        res = np.abs(p) / bound
    res[bound == 0] = 0.0
    return res


def _initial_guesses(coeffs: np.ndarray) -> np.ndarray:
    n = len(coeffs) - 1
    c = np.abs(coeffs / coeffs[0])
    # Fujiwara bound on root moduli
    radius = 2 * max(c[k] ** (1.0 / k) for k in range(1, n + 1))
    radius = max(radius * 0.5, np.finfo(float).tiny)
    angles = 2 * np.pi * np.arange(n) / n + 0.4
    return radius * np.exp(1j * angles)


def poly_roots(coeffs, *, guesses=None, max_iter: int = 200, tol: float = 1e-12) -> np.ndarray:
    """All roots (with multiplicity) of ``c_0 z^n + ... + c_n``.

    Coefficients are ordered highest degree first, as in :func:`numpy.roots`.
    Iteration stops once every root is either pinned by a small inclusion
    disk or the Aberth corrections fall to rounding level; the result must
    then have backward error (relative residual) at most ``tol``.

    Raises
    ------
    ValueError
        Zero leading coefficient or degree < 1.
    ConvergenceError
        No convergence within ``max_iter`` sweeps, or residual above ``tol``.
    """
    coeffs = np.atleast_1d(np.asarray(coeffs, dtype=complex))
    if coeffs.ndim != 1 or len(coeffs) < 2:
        raise ValueError("need a polynomial of degree >= 1")
    if coeffs[0] == 0:
        raise ValueError("leading coefficient must be nonzero")

    # exact zero roots from trailing zeros
    nz = 0
    while coeffs[-1 - nz] == 0:
        nz += 1
    core = coeffs[: len(coeffs) - nz]
    n = len(core) - 1
    if n == 0:
        return np.zeros(nz, dtype=complex)
    if n == 1:
        return np.concatenate([[-core[1] / core[0]], np.zeros(nz, dtype=complex)])

    if guesses is not None:
        z = np.array(guesses, dtype=complex)[:n]
        if len(z) < n:
            z = np.concatenate([z, _initial_guesses(core)[len(z):]])
        # separate coincident warm starts
        for i in range(n):
            for j in range(i):
                if z[i] == z[j]:
                    z[i] += 1e-8 * (1 + abs(z[i])) * np.exp(0.7j * (i + 1))
    else:
        z = _initial_guesses(core)

    dcore = core[:-1] * np.arange(n, 0, -1)
    converged = False
    for _ in range(max_iter):
        p, _, bound = _horner(core, z)
        dp = np.polyval(dcore, z)
        diff = z[:, None] - z[None, :]
        np.fill_diagonal(diff, np.inf)
        with np.errstate(divide="ignore", invalid="ignore"):
            ratio = p / dp
            sums = np.sum(1.0 / diff, axis=1)
            delta = ratio / (1.0 - ratio * sums)
        done_resid = np.abs(p) <= 2 * n * EPS * bound
        delta = np.where(done_resid | ~np.isfinite(delta), 0.0, delta)
        scale = np.maximum(np.abs(z), np.finfo(float).tiny)
        np.fill_diagonal(diff, 1.0)
        with np.errstate(divide="ignore", invalid="ignore", over="ignore"):
            radii = n * np.abs(p / (core[0] * np.prod(diff, axis=1)))
        enclosed = radii <= 4 * EPS * scale
        z = z - delta
        small = enclosed | (np.abs(delta) <= 4 * EPS * scale)
        if np.all(small):
            converged = True
            break
    if not converged:
        raise ConvergenceError(f"Aberth iteration did not converge in {max_iter} sweeps")
    res = relative_residuals(core, z)
    if np.any(res > tol):
        raise ConvergenceError(f"root residual {res.max():.3e} exceeds {tol:g}")
    return np.concatenate([z, np.zeros(nz, dtype=complex)])
