from fractions import Fraction as F

import pytest
from hypothesis import given, settings, strategies as st

from jacobi_rmt.numkit import (
    FormalSeries,
    as_rational,
    binomial_general,
    exact_str,
    pochhammer,
    series_compose,
    series_mul,
    series_power,
    series_reverse,
)

rationals = st.fractions(min_value=-5, max_value=5, max_denominator=12)


def S(*c, order=None):
    return FormalSeries.from_coefficients(c, order)


@pytest.mark.parametrize("top,k,expected", [
    (6, 2, 15), (F(7, 2), 2, F(35, 8)), (F(1, 3), 0, 1), (-1, 3, -1), (5, 7, 0),
])
def test_binomial_general(top, k, expected):
    assert binomial_general(top, k) == expected


def test_binomial_rejects_negative_k():
    with pytest.raises(ValueError):
        binomial_general(3, -1)


@pytest.mark.parametrize("x,k,expected", [(3, 2, 12), (F(2, 3), 0, 1), (-5, 3, -60)])
def test_pochhammer(x, k, expected):
    assert pochhammer(x, k) == expected


def test_floats_rejected():
    with pytest.raises(TypeError):
        as_rational(0.5)
    assert as_rational("3/4") == F(3, 4)


def test_mul_examples():
    assert series_mul(S(1, 1, 0), S(1, -1, 0)) == S(1, 0, -1)
    assert series_mul(S(*[1] * 10), S(1, -1, order=10)) == S(1, order=10)
    z = FormalSeries.identity(3)
    assert z * z == S(0, 0, 1)


def test_mul_order_mismatch():
    with pytest.raises(ValueError):
        S(1, 1) * S(1, 1, 0)


def test_compose_examples():
    f = S(1, 2, 3, 4, 5)
    z = FormalSeries.identity(5)
    assert series_compose(z, S(0, 2, 3, 4, 5)) == S(0, 2, 3, 4, 5)
    assert series_compose(S(0, 0, 1, 0, 0, 0), S(0, 1, 1, 0, 0, 0)) == S(0, 0, 1, 2, 1, 0)
    geo = S(*[1] * 5)
    assert series_compose(geo, z) == geo
    with pytest.raises(ValueError):
        series_compose(f, f)


def test_reverse_examples():
    assert series_reverse(FormalSeries.identity(6)) == FormalSeries.identity(6)
    assert series_reverse(S(0, 1, 1, 1, 1, 1)) == S(0, 1, -1, 1, -1, 1)
    assert series_reverse(S(0, 2, 0, 0)) == S(0, F(1, 2), 0, 0)
    with pytest.raises(ZeroDivisionError):
        series_reverse(S(0, 0, 1))


def test_power_fractional():
    # (1 + z)^{1/2} squared is 1 + z
    h = series_power(S(1, 1, 0, 0, 0, 0), F(1, 2))
    assert h * h == S(1, 1, 0, 0, 0, 0)
    assert h[2] == F(-1, 8)


def test_shifts_and_exact_str():
    f = S(0, 3, 4)
    assert f.shift_down() == S(3, 4)
    assert f.shift_up() == S(0, 0, 3, 4)
    assert exact_str(F(-3, 6)) == "-1/2"
    assert exact_str(F(4)) == "4"


series = st.lists(rationals, min_size=6, max_size=6).map(lambda c: FormalSeries.from_coefficients(c))
units = series.filter(lambda f: f[0] != 0)
nonunit = st.lists(rationals, min_size=5, max_size=5).map(
    lambda c: FormalSeries.from_coefficients([0] + c))
invertible = nonunit.filter(lambda f: f[1] != 0)


@settings(max_examples=60, deadline=None)
@given(series, series, series)
def test_mul_ring_laws(a, b, c):
    assert a * b == b * a
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c


@settings(max_examples=60, deadline=None)
@given(units)
def test_inverse(f):
    assert f * f.inverse() == FormalSeries.constant(1, f.order)


@settings(max_examples=60, deadline=None)
@given(invertible)
def test_reverse_is_compositional_inverse(f):
    g = series_reverse(f)
    z = FormalSeries.identity(f.order)
    assert series_compose(f, g) == z
    assert series_compose(g, f) == z


@settings(max_examples=40, deadline=None)
@given(units, st.integers(min_value=-3, max_value=4))
def test_integer_power_matches_repeated_product(f, k):
    expected = FormalSeries.constant(1, f.order)
    base = f if k >= 0 else f.inverse()
    for _ in range(abs(k)):
        expected = expected * base
    assert series_power(f, k) == expected
