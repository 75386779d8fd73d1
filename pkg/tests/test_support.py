import math
from fractions import Fraction as F

import pytest
import sympy as sp

from jacobi_rmt.moments import ModelParams, ParameterError
from jacobi_rmt.spectral.branch import branch_at
from jacobi_rmt.spectral.equation import SpectralCurve
from jacobi_rmt.spectral.support import discriminant_quadratic, endpoints

LATTICE = [ModelParams(r, s, a) for r in range(1, 6) for s in range(r)
           for a in (F(1, 2), F(1), F(2), F(1, 3))]


def test_marchenko_pastur():
    sup = endpoints(ModelParams(1, 0, 1))
    assert sup.w_star == pytest.approx(2, abs=1e-14)
    assert sup.x_star == pytest.approx(4, abs=1e-13)
    assert sup.x_tilde is None


def test_fuss_catalan_edge():
    for r in range(1, 6):
        assert endpoints(ModelParams(r, 0, 1)).x_star == pytest.approx(
            (r + 1) ** (r + 1) / r ** r, rel=1e-13)


def test_r2_s1():
    sup = endpoints(ModelParams(2, 1, 1))
    assert sup.w_star == pytest.approx(math.sqrt(3), rel=1e-14)
    assert sup.x_star == pytest.approx(1.5 * math.sqrt(3), rel=1e-14)
    assert sup.w_tilde == pytest.approx(-math.sqrt(3), rel=1e-14)
    assert sup.x_tilde == pytest.approx(-1.5 * math.sqrt(3), rel=1e-13)


@pytest.mark.parametrize("p", LATTICE, ids=str)
def test_invariants(p):
    sup = endpoints(p)
    curve = SpectralCurve(p)
    assert abs(curve.f_of_w(sup.w_star) - sup.x_star) <= 1e-10 * sup.x_star
    assert abs(discriminant_quadratic(p, sup.w_star)) <= 1e-12 * max(1, sup.w_star) ** 2
    assert abs(discriminant_quadratic(p, sup.w_tilde)) <= 1e-12 * max(1, abs(sup.w_tilde)) ** 2
    assert sup.w_star > float(p.a) and sup.x_star > 0 and sup.w_tilde < 0
    if p.s == 0:
        assert sup.x_tilde is None
    else:
        assert sup.x_tilde is not None
    # x* is a double root: P_w vanishes there too
    assert abs(curve.d_dw(sup.w_star, sup.x_star)) <= 1e-9 * (1 + sup.w_star) ** (p.r + 1)


def test_requires_s_below_r():
    with pytest.raises(ParameterError):
        endpoints(ModelParams(3, 3, 1))


def _discriminant_roots(p):
    w, x = sp.symbols("w x")
    a = sp.Rational(p.a.numerator, p.a.denominator)
    disc = sp.discriminant(w ** (p.r + 1) - x * (w - a) * (w + 1) ** p.s, w)
    return [complex(t) for t in sp.Poly(disc, x).nroots(n=30, maxsteps=500)]


@pytest.mark.parametrize("p", [q for q in LATTICE if q.r <= 4], ids=str)
def test_branch_points_are_discriminant_roots(p):
    roots = _discriminant_roots(p)
    sup = endpoints(p)
    for v in filter(None, [sup.x_star, sup.x_tilde]):
        assert min(abs(t - v) for t in roots) <= 1e-9 * max(1, abs(v))


@pytest.mark.parametrize("p", [ModelParams(2, 1, 1), ModelParams(3, 2, 1),
                               ModelParams(3, 1, 2), ModelParams(4, 2, 2)], ids=str)
def test_tilde_point_not_on_physical_sheet(p):
    # x_tilde may fall inside (0, x*) (e.g. r=3, s=1, a=2), but the physical
    # branch never takes the negative value w_tilde there
    sup = endpoints(p)
    xt = sup.x_tilde
    if 0 < xt < sup.x_star:
        w = branch_at(p, xt, side=1).w
        assert abs(w.imag) > 1e-3
    else:
        w = branch_at(p, xt).w
        assert w.real > 0
    assert abs(w - sup.w_tilde) > 1e-3
