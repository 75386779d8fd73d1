"""Exact rational arithmetic and truncated formal power series.

Rationals are :class:`fractions.Fraction` (always normalized, positive
denominator).  :class:`FormalSeries` holds the first ``order`` coefficients
of a power series in ``z`` and never reads beyond them.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational
from typing import Iterable

DEFAULT_ORDER = 16

ExactRational = Fraction


def as_rational(x) -> Fraction:
    """Coerce ints, Fractions and exact decimal strings to Fraction.

    Floats are rejected: they would silently inject rounding error into
    exact pipelines.
    """
    if isinstance(x, Fraction):
        return x
    if isinstance(x, bool):
        raise TypeError("booleans are not rationals")
    if isinstance(x, (int, Rational)):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x.strip())
    raise TypeError(f"cannot convert {type(x).__name__} to an exact rational")


def binomial_general(top, k: int) -> Fraction:
    """Generalized binomial ``top (top-1) ... (top-k+1) / k!`` for rational top."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    top = as_rational(top)
    num = Fraction(1)
    den = 1
    for j in range(k):
        num *= top - j
        den *= j + 1
    return num / den


def pochhammer(x, k: int) -> Fraction:
    """Rising factorial ``x (x+1) ... (x+k-1)``."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    x = as_rational(x)
    out = Fraction(1)
    for j in range(k):
        out *= x + j
    return out


@dataclass(frozen=True)
class FormalSeries:
    """Truncated power series ``c0 + c1 z + ... + c_{N-1} z^{N-1}``."""

    coefficients: tuple[Fraction, ...]

    def __post_init__(self):
        coeffs = tuple(as_rational(c) for c in self.coefficients)
        if not coeffs:
            raise ValueError("a series needs order >= 1")
        object.__setattr__(self, "coefficients", coeffs)

    @classmethod
    def from_coefficients(cls, coeffs: Iterable, order: int | None = None) -> "FormalSeries":
        """Build a series, padding with zeros or truncating to ``order``."""
        coeffs = list(coeffs)
        if order is None:
            order = len(coeffs)
        coeffs = coeffs[:order] + [0] * max(0, order - len(coeffs))
        return cls(tuple(coeffs))

    @classmethod
    def constant(cls, c, order: int = DEFAULT_ORDER) -> "FormalSeries":
        return cls.from_coefficients([c], order)

    @classmethod
    def identity(cls, order: int = DEFAULT_ORDER) -> "FormalSeries":
        """The series ``z``."""
        return cls.from_coefficients([0, 1], order)

    @property
    def order(self) -> int:
        return len(self.coefficients)

    def __getitem__(self, k: int) -> Fraction:
        return self.coefficients[k]

    def __len__(self) -> int:
        return len(self.coefficients)

    def __iter__(self):
        return iter(self.coefficients)

    def truncate(self, order: int) -> "FormalSeries":
        if order > self.order:
            raise ValueError(f"cannot extend a series of order {self.order} to {order}")
        return FormalSeries(self.coefficients[:order])

    def _check(self, other: "FormalSeries"):
        if not isinstance(other, FormalSeries):
            raise TypeError("expected a FormalSeries")
        if other.order != self.order:
            raise ValueError(f"order mismatch: {self.order} vs {other.order}")

    def __add__(self, other):
        if not isinstance(other, FormalSeries):
            other = FormalSeries.constant(other, self.order)
        self._check(other)
        return FormalSeries(tuple(x + y for x, y in zip(self, other)))

    __radd__ = __add__

    def __neg__(self):
        return FormalSeries(tuple(-c for c in self))

    def __sub__(self, other):
        if not isinstance(other, FormalSeries):
            other = FormalSeries.constant(other, self.order)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, FormalSeries):
            return series_mul(self, other)
        c = as_rational(other)
        return FormalSeries(tuple(c * x for x in self))

    __rmul__ = __mul__

    def shift_down(self) -> "FormalSeries":
        """Divide by ``z``; the constant term must vanish.  Order drops by one."""
        if self.coefficients[0] != 0:
            raise ValueError("series has a nonzero constant term; cannot divide by z")
        if self.order < 2:
            raise ValueError("nothing left after dividing by z")
        return FormalSeries(self.coefficients[1:])

    def shift_up(self) -> "FormalSeries":
        """Multiply by ``z``; the order grows by one."""
        return FormalSeries((Fraction(0),) + self.coefficients)

    def inverse(self) -> "FormalSeries":
        """Multiplicative inverse; needs a nonzero constant term."""
        return series_power(self, -1)

    def __pow__(self, k: int) -> "FormalSeries":
        return series_power(self, k)

    def __repr__(self):
        return f"FormalSeries({[str(c) for c in self.coefficients]})"


def series_mul(a: FormalSeries, b: FormalSeries) -> FormalSeries:
    """Cauchy product truncated to the common order."""
    a._check(b)
    n = a.order
    ac, bc = a.coefficients, b.coefficients
    out = []
    for k in range(n):
        acc = Fraction(0)
        for j in range(k + 1):
            if ac[j] and bc[k - j]:
                acc += ac[j] * bc[k - j]
        out.append(acc)
    return FormalSeries(tuple(out))


def series_power(f: FormalSeries, alpha) -> FormalSeries:
    """``f**alpha`` via the J.C.P. Miller recurrence.

    Integer alpha (any sign) needs ``f[0] != 0`` unless alpha >= 0.  A
    non-integer rational alpha needs ``f[0] == 1`` so the result stays rational.
    """
    alpha = as_rational(alpha)
    n = f.order
    f0 = f[0]
    if alpha.denominator != 1:
        if f0 != 1:
            raise ValueError("fractional powers need a unit constant term")
    else:
        alpha = int(alpha)
    if f0 == 0:
        if alpha < 0:
            raise ZeroDivisionError("series with zero constant term is not invertible")
        out = FormalSeries.constant(1, n)
        for _ in range(alpha):
            out = series_mul(out, f)
        return out
    g = [Fraction(1) if f0 == 1 else f0 ** alpha]
    fc = f.coefficients
    for k in range(1, n):
        acc = Fraction(0)
        for j in range(1, k + 1):
            if fc[j]:
                acc += ((alpha + 1) * j - k) * fc[j] * g[k - j]
        g.append(acc / (k * f0))
    return FormalSeries(tuple(g))


def series_compose(outer: FormalSeries, inner: FormalSeries) -> FormalSeries:
    """``outer(inner(z))`` truncated to the common order (Horner scheme)."""
    outer._check(inner)
    if inner[0] != 0:
        raise ValueError("inner series must have zero constant term")
    n = outer.order
    acc = FormalSeries.constant(outer[n - 1], n)
    for k in range(n - 2, -1, -1):
        acc = series_mul(acc, inner)
        acc = acc + outer[k]
    return acc


def series_reverse(f: FormalSeries) -> FormalSeries:
    """Compositional inverse by Lagrange inversion.

    ``[z^n] g = (1/n) [w^{n-1}] (w / f(w))^n``.
    """
    n = f.order
    if f[0] != 0:
        raise ValueError("series to reverse must have zero constant term")
    if n < 2:
        return FormalSeries.constant(0, n)
    if f[1] == 0:
        raise ZeroDivisionError("vanishing linear coefficient; series is not locally invertible")
    # h = w / f(w), computed from f/w padded back to full order
    f_over_w = FormalSeries(f.coefficients[1:] + (Fraction(0),))
    h = f_over_w.inverse()
    g = [Fraction(0)]
    hp = FormalSeries.constant(1, n)
    for k in range(1, n):
        hp = series_mul(hp, h)
        g.append(hp[k - 1] / k)
    return FormalSeries(tuple(g))


def exact_str(x: Fraction) -> str:
    """Serialize as ``p/q`` (``p`` alone for integers)."""
    x = as_rational(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"

