import math

import numpy as np
import pytest
from scipy.special import beta as beta_fn

from jacobi_rmt.spectral.roots import ConvergenceError
from jacobi_rmt.spectral.tanhsinh import integrate


def test_smooth():
    res = integrate(np.exp, 0.0, 1.0, rtol=1e-13)
    assert float(res.value) == pytest.approx(math.e - 1, rel=1e-14)


@pytest.mark.parametrize("p,q", [(-0.5, 0.5), (-0.9, 0.5), (-0.75, 0.0), (0.5, 0.25), (2.0, 3.0)])
def test_beta_endpoint_singularities(p, q):
    res = integrate(lambda x: x ** p * (1 - x) ** q, 0.0, 1.0, rtol=1e-12)
    assert float(res.value) == pytest.approx(beta_fn(p + 1, q + 1), rel=1e-10)


def test_vector_valued():
    ks = np.arange(5)
    res = integrate(lambda x: x[:, None] ** ks[None, :], 0.0, 2.0, rtol=1e-13)
    assert np.allclose(res.value, 2.0 ** (ks + 1) / (ks + 1), rtol=1e-13)


def test_soft_edge_at_hi():
    # square-root vanishing at the right end, inverse square root at zero
    res = integrate(lambda x: np.sqrt(2.0 - x) / np.sqrt(x), 0.0, 2.0, rtol=1e-12)
    assert float(res.value) == pytest.approx(math.pi, rel=1e-10)


def test_bad_interval():
    with pytest.raises(ValueError):
        integrate(np.exp, 1.0, 1.0)


def test_nonconvergence():
    with pytest.raises(ConvergenceError):
        integrate(lambda x: np.sin(200 * x), 0.0, 1.0, rtol=1e-14, max_level=3, min_level=1)
