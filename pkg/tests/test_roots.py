import numpy as np
import pytest

from jacobi_rmt.spectral.roots import (
    ConvergenceError,
    inclusion_radii,
    poly_roots,
    relative_residuals,
)


def _sorted(z):
    z = np.asarray(z, dtype=complex)
    return z[np.lexsort((z.imag.round(9), z.real.round(9)))]


def test_examples():
    assert np.allclose(_sorted(poly_roots([1, 0, -1])), [-1, 1], atol=1e-14)
    assert np.allclose(_sorted(poly_roots([1, -2, 2])), [1 - 1j, 1 + 1j], atol=1e-14)
    assert np.all(poly_roots([1, 0, 0, 0]) == 0)


def test_leading_zero_rejected():
    with pytest.raises(ValueError):
        poly_roots([0, 1, 2])


def test_mixed_zero_roots():
    # w^2 (w - 3)
    z = _sorted(poly_roots([1, -3, 0, 0]))
    assert np.allclose(z, [0, 0, 3], atol=1e-14)


def test_against_numpy_random():
    rng = np.random.default_rng(7)
    for _ in range(200):
        deg = int(rng.integers(2, 9))
        c = rng.standard_normal(deg + 1) + 1j * rng.standard_normal(deg + 1)
        ours = poly_roots(c)
        ref = np.roots(c)
        # match each reference root to its nearest computed root
        d = np.abs(ours[:, None] - ref[None, :])
        assert np.all(d.min(axis=0) <= 1e-8 * np.maximum(1, np.abs(ref)))
        assert np.all(relative_residuals(c, ours) <= 1e-12)


def test_inclusion_radii_contain_true_roots():
    true = np.array([1.0, -2.0, 0.5 + 1j, 0.5 - 1j])
    c = np.poly(true)
    approx = true + 1e-6 * np.array([1, 1j, -1, 1])
    rad = inclusion_radii(c, approx)
    d = np.abs(approx[:, None] - true[None, :])
    # each Weierstrass disc contains at least one root
    assert np.all(np.any(d <= rad[:, None] + 1e-15, axis=1))


def test_wilkinson_like_cluster():
    c = np.poly([1, 1 + 1e-3, 1 - 1e-3, 2, 3])
    z = _sorted(poly_roots(c))
    assert np.allclose(z.real, [1 - 1e-3, 1, 1 + 1e-3, 2, 3], atol=1e-9)


def test_nonconvergence_reported():
    with pytest.raises(ConvergenceError):
        poly_roots(np.poly([1, 2, 3, 4, 5, 6]), max_iter=1)
