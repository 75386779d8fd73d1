import cmath
import math
from fractions import Fraction as F

import numpy as np
import pytest

from jacobi_rmt.moments import ModelParams
from jacobi_rmt.spectral.branch import TrackingError, anchor, branch_at
from jacobi_rmt.spectral.equation import SpectralCurve
from jacobi_rmt.spectral.support import endpoints

MP = ModelParams(1, 0, 1)
CASES = [ModelParams(2, 1, 1), ModelParams(3, 1, F(1, 2)), ModelParams(3, 2, 2),
         ModelParams(2, 0, F(1, 2)), ModelParams(4, 3, 1)]


def scaled_residual(p, w, x):
    return SpectralCurve(p).relative_residual(w, x)


def test_large_x_tends_to_a():
    w = branch_at(MP, 1e8).w
    assert w.imag == 0
    assert abs(w - 1) < 2e-8
    # first correction a^{r+1} / ((1+a)^s x)
    assert w.real - 1 == pytest.approx(1e-8, rel=1e-6)


def test_marchenko_pastur_cut():
    up = branch_at(MP, 2, side=1).w
    down = branch_at(MP, 2, side=-1).w
    assert abs(up - (1 - 1j)) < 1e-12
    assert abs(down - (1 + 1j)) < 1e-12


def test_cut_requires_side():
    with pytest.raises(ValueError):
        branch_at(MP, 2)
    with pytest.raises(TrackingError):
        branch_at(MP, 0)
    with pytest.raises(TrackingError):
        branch_at(MP, 4)


@pytest.mark.parametrize("p", CASES, ids=str)
def test_real_axis_right_of_support(p):
    sup = endpoints(p)
    rng = np.random.default_rng(11)
    for x in sup.x_star * (1 + 9 * rng.random(10)):
        w = branch_at(p, x).w
        assert w.imag == 0
        assert float(p.a) < w.real < sup.w_star
        assert scaled_residual(p, w, x) <= 1e-12


@pytest.mark.parametrize("p", CASES, ids=str)
def test_negative_axis_real_positive(p):
    for x in (-0.1, -3.0, -50.0):
        w = branch_at(p, x).w
        assert abs(w.imag) <= 1e-12 * abs(w)
        assert w.real > 0


@pytest.mark.parametrize("p", CASES, ids=str)
def test_schwarz_reflection(p):
    xs = endpoints(p).x_star
    for x in (0.3 * xs + 0.2j * xs, 1.5 * xs - 0.01j, -xs + 2j):
        w = branch_at(p, x).w
        wc = branch_at(p, x.conjugate()).w
        assert abs(w - wc.conjugate()) <= 1e-12 * max(1, abs(w))
        assert scaled_residual(p, w, x) <= 1e-12


def test_stieltjes_sign():
    # G(x) = w/x is the Stieltjes transform of a measure of mass a: it maps
    # the upper half plane into the lower one and G ~ a/x at infinity
    for p in CASES:
        for x in (5j, 1 + 1j, -2 + 0.5j, 0.01 + 1e-3j):
            g = branch_at(p, x).w / x
            assert g.imag < 0
        big = 1e6 + 1e6j
        g = branch_at(p, big).w / big
        assert abs(g * big / float(p.a) - 1) < 1e-4


def test_anchor_is_real_root():
    p = ModelParams(3, 1, 1)
    x0, w0 = anchor(p)
    assert x0 == pytest.approx(2 * endpoints(p).x_star)
    assert abs(SpectralCurve(p).value(w0, x0)) <= 1e-12 * w0 ** 4


def test_agrees_with_closed_form_mp():
    # Marchenko-Pastur: w solves w^2 - x w + x = 0, physical root tends to 1
    for x in (0.5 + 0.5j, 6.0, -1.0, 3 - 2j):
        w = branch_at(MP, x).w
        roots = [(x + s * cmath.sqrt(x * x - 4 * x)) / 2 for s in (1, -1)]
        closest = min(roots, key=lambda r: abs(r - w))
        assert abs(w - closest) <= 1e-12 * max(1, abs(w))
        other = max(roots, key=lambda r: abs(r - w))
        assert abs(other - w) > 1e-6
