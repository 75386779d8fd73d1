from fractions import Fraction as F

import pytest

from jacobi_rmt.freeconv import (
    TransformError,
    TransformSeries,
    factorization_factors,
    free_multiply,
    free_product,
    moments_from_s,
    psi_from_moments,
    s_from_moments,
    verify_factorization,
)
from jacobi_rmt.moments import ModelParams, fuss_catalan_sequence, moments, raney_sequence
from jacobi_rmt.numkit import FormalSeries

CATALAN = [1, 1, 2, 5, 14]
ONES = [1] * 8


def alternating(lead, order):
    # series of lead - z + z^2 - ...
    return [lead] + [(-1) ** k for k in range(1, order)]


def test_psi():
    assert list(psi_from_moments(ONES, 6).series) == [0, 1, 1, 1, 1, 1]
    assert list(psi_from_moments(CATALAN, 5).series) == [0, 1, 2, 5, 14]


def test_s_transforms():
    assert list(s_from_moments(ONES, 6).series) == [1, 0, 0, 0, 0]
    assert list(s_from_moments(fuss_catalan_sequence(1, 8), 8).series) == alternating(1, 7)
    arcsine = raney_sequence(1, F(1, 2), 8)
    assert list(s_from_moments(arcsine, 8).series) == alternating(2, 7)


def test_zero_first_moment():
    with pytest.raises(TransformError):
        s_from_moments([1, 0, 1, 0, 2], 5)


def test_mass_must_be_one():
    with pytest.raises(TransformError):
        psi_from_moments([2, 1, 1], 3)


def test_moments_from_s():
    one = FormalSeries.constant(1, 6)
    assert list(moments_from_s(one, 7)) == [1] * 7
    inv = FormalSeries.from_coefficients(alternating(1, 4))
    assert list(moments_from_s(inv, 5)) == CATALAN
    # (z+2)/(z+1)^2
    z2 = FormalSeries.from_coefficients([2, 1, 0, 0, 0, 0])
    s = z2 * FormalSeries.from_coefficients([1, 1, 0, 0, 0, 0]) ** -2
    assert list(moments_from_s(s, 7)) == list(moments(ModelParams(2, 1, 1), 6))


def test_round_trip():
    m = moments(ModelParams(3, 1, 1), 9)
    assert list(moments_from_s(s_from_moments(m, 10), 10)) == list(m)


def test_free_multiply_examples():
    fc1 = fuss_catalan_sequence(1, 5)
    assert list(free_multiply(fc1, fc1, 5)) == [1, 1, 3, 12, 55]
    m = moments(ModelParams(2, 2, 1), 6)
    assert list(free_multiply(m, ONES, 7)) == list(m)
    arcsine = raney_sequence(1, F(1, 2), 8)
    assert list(free_multiply(fc1.values + (42, 132, 429), arcsine, 8)) == \
        list(moments(ModelParams(2, 1, 1), 7))


def test_free_product_single_factor_passes_through():
    fc2 = fuss_catalan_sequence(2, 6)
    assert list(free_product([fc2], 6)) == list(fc2)


def test_free_product_matches_pairwise():
    fs = factorization_factors(4, 2, 9)
    acc = fs[0]
    for f in fs[1:]:
        acc = free_multiply(acc, f, 9)
    assert list(free_product(fs, 9)) == list(acc)


def test_factorization_report():
    rep = verify_factorization(2, 1, 10)
    assert rep.passed and bool(rep) and len(rep.per_coefficient) == 10


def test_transform_series_invariants():
    with pytest.raises((TransformError, ValueError)):
        TransformSeries("psi", FormalSeries.from_coefficients([1, 1, 1]))
