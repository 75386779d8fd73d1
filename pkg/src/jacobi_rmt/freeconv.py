"""S-transforms of moment sequences and free multiplicative convolution.

Everything is a truncated series over the rationals:

    psi(z) = sum_{n>=1} m_n z^n
    chi    = compositional inverse of psi
    S(z)   = (1+z)/z * chi(z)

A sequence m_0..m_{N-1} yields an S-transform with N-1 coefficients, and
:func:`moments_from_s` maps N-1 coefficients back to N moments, so a round
trip preserves the length.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Literal, Sequence

from .moments import (
    MomentSequence,
    ModelParams,
    fuss_catalan_sequence,
    moment_jacobi,
    raney_sequence,
)
from .numkit import FormalSeries, series_mul, series_reverse


class TransformError(ArithmeticError):
    """A transform is undefined for the given input (zero mean, wrong mass...)."""


Kind = Literal["psi", "chi", "s_transform"]


@dataclass(frozen=True)
class TransformSeries:
    kind: Kind
    series: FormalSeries

    def __post_init__(self):
        c = self.series.coefficients
        if self.kind in ("psi", "chi") and c[0] != 0:
            raise TransformError(f"{self.kind} must have zero constant term")
        if self.kind == "chi" and len(c) > 1 and c[1] == 0:
            raise TransformError("chi must have a nonzero linear term")
        if self.kind == "s_transform" and c[0] == 0:
            raise TransformError("S-transform must have a nonzero constant term")

    @property
    def coefficients(self) -> tuple[Fraction, ...]:
        return self.series.coefficients


def _values(m) -> tuple[Fraction, ...]:
    if isinstance(m, MomentSequence):
        return m.values
    return MomentSequence(tuple(m)).values


def psi_from_moments(m: MomentSequence | Sequence, order: int) -> TransformSeries:
    vals = _values(m)
    if vals[0] != 1:
        raise TransformError(f"expected a probability measure (mass 1), got mass {vals[0]}")
    if order > len(vals):
        raise ValueError(f"order {order} needs {order} moments, only {len(vals)} given")
    return TransformSeries("psi", FormalSeries((Fraction(0),) + vals[1:order]))


def s_from_moments(m: MomentSequence | Sequence, order: int) -> TransformSeries:
    """S-transform with ``order - 1`` coefficients from moments m_0..m_{order-1}."""
    if order < 2:
        raise ValueError("order must be >= 2")
    psi = psi_from_moments(m, order).series
    if psi[1] == 0:
        raise TransformError("first moment vanishes; the S-transform is undefined")
    chi = series_reverse(psi)
    s = chi.shift_down()
    one_plus_z = FormalSeries.from_coefficients([1, 1], s.order)
    return TransformSeries("s_transform", series_mul(one_plus_z, s))


def moments_from_s(S: TransformSeries | FormalSeries, order: int) -> MomentSequence:
    """Moments m_0..m_{order-1} of the measure whose S-transform is ``S``."""
    series = S.series if isinstance(S, TransformSeries) else S
    if series[0] == 0:
        raise TransformError("S-transform constant term vanishes")
    if order < 2:
        raise ValueError("order must be >= 2")
    if series.order < order - 1:
        raise ValueError(f"need {order - 1} S coefficients, have {series.order}")
    s = series.truncate(order - 1)
    inv = FormalSeries.from_coefficients([1, 1], order - 1).inverse()
    chi = series_mul(s, inv).shift_up()
    psi = series_reverse(chi)
    return MomentSequence((Fraction(1),) + psi.coefficients[1:])


def free_multiply(mA, mB, order: int) -> MomentSequence:
    """Moments m_0..m_{order-1} of the free multiplicative convolution."""
    sa = s_from_moments(mA, order)
    sb = s_from_moments(mB, order)
    out = moments_from_s(series_mul(sa.series, sb.series), order)
    la = getattr(mA, "label", "") or "?"
    lb = getattr(mB, "label", "") or "?"
    return MomentSequence(out.values, label=f"{la} [x] {lb}")


def free_product(factors: Sequence, order: int) -> MomentSequence:
    """Convolve any number of factors by multiplying their S-transforms once."""
    if not factors:
        raise ValueError("need at least one factor")
    if len(factors) == 1:
        vals = _values(factors[0])
        if len(vals) < order:
            raise ValueError(f"factor has {len(vals)} moments, need {order}")
        return MomentSequence(vals[:order], label=getattr(factors[0], "label", ""))
    s = None
    for f in factors:
        sf = s_from_moments(f, order).series
        s = sf if s is None else series_mul(s, sf)
    out = moments_from_s(s, order)
    label = " [x] ".join(getattr(f, "label", "") or "?" for f in factors)
    return MomentSequence(out.values, label=label)


@dataclass(frozen=True)
class FactorizationReport:
    r: int
    s: int
    order: int
    expected: tuple[Fraction, ...]
    computed: tuple[Fraction, ...]

    @property
    def per_coefficient(self) -> list[bool]:
        return [e == c for e, c in zip(self.expected, self.computed)]

    @property
    def passed(self) -> bool:
        return all(self.per_coefficient)

    def __bool__(self):
        return self.passed


def factorization_factors(r: int, s: int, order: int) -> list[MomentSequence]:
    """FC_{r-s} followed by s copies of the arcsine law R_{1,1/2}."""
    arcsine = raney_sequence(1, Fraction(1, 2), order)
    return [fuss_catalan_sequence(r - s, order)] + [arcsine] * s


def verify_factorization(r: int, s: int, order: int) -> FactorizationReport:
    """Compare FC_{r-s} [x] R_{1,1/2}^{[x] s} with J_{r,s,1} coefficient by coefficient.

    The convolution is built by repeated pairwise :func:`free_multiply`.
    """
    params = ModelParams(r, s, 1).require_density()
    if order < 2:
        raise ValueError("order must be >= 2")
    factors = factorization_factors(r, s, order)
    kappa = factors[0]
    for f in factors[1:]:
        kappa = free_multiply(kappa, f, order)
    expected = tuple(moment_jacobi(params, n) for n in range(order))
    return FactorizationReport(r, s, order, expected, tuple(kappa.values[:order]))
