"""Moment sequences J_{r,s,a}(n), Fuss-Catalan and Raney numbers.

J_{r,s,a}(n) is computed by three routes that share nothing beyond the
rational type: the Jacobi polynomial closed form, a Leibniz expansion of an
(n-1)-th derivative, and the coefficients of the fixed point of
``w = a + u w^{r+1} / (1+w)^s`` as a formal series in ``u``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import comb, factorial

from .numkit import (
    FormalSeries,
    as_rational,
    binomial_general,
    pochhammer,
    series_mul,
    series_power,
)


class ParameterError(ValueError):
    """Invalid model parameters."""


@dataclass(frozen=True)
class ModelParams:
    """The triple (r, s, a).

    Moments exist for ``0 <= s <= r``; anything that needs the density or the
    support endpoints calls :meth:`require_density` for the stricter ``s < r``.
    """

    r: int
    s: int
    a: Fraction = Fraction(1)

    def __post_init__(self):
        if isinstance(self.r, bool) or int(self.r) != self.r or self.r < 1:
            raise ParameterError(f"r must be a positive integer, got {self.r!r}")
        if isinstance(self.s, bool) or int(self.s) != self.s or self.s < 0:
            raise ParameterError(f"s must be a nonnegative integer, got {self.s!r}")
        object.__setattr__(self, "r", int(self.r))
        object.__setattr__(self, "s", int(self.s))
        if self.s > self.r:
            raise ParameterError(f"need s <= r, got r={self.r}, s={self.s}")
        a = self.a if isinstance(self.a, float) else as_rational(self.a)
        if a <= 0:
            raise ParameterError(f"a must be positive, got {a}")
        object.__setattr__(self, "a", a)

    @property
    def exact(self) -> bool:
        return isinstance(self.a, Fraction)

    def require_density(self) -> "ModelParams":
        if self.s >= self.r:
            raise ParameterError(
                f"density and support need s < r, got r={self.r}, s={self.s}"
            )
        return self

    def require_exact(self) -> "ModelParams":
        if not self.exact:
            raise ParameterError("exact moments need a rational a")
        return self


@dataclass(frozen=True)
class VaryingJacobiIndex:
    """Jacobi parameters attached to degree ``n``:
    ``alpha = r n + r + 1`` and ``beta = -(r+1-s) n - (r+2-s)``.
    """

    n: int
    r: int
    s: int

    @property
    def alpha(self) -> int:
        return self.r * self.n + self.r + 1

    @property
    def beta(self) -> int:
        return -(self.r + 1 - self.s) * self.n - (self.r + 2 - self.s)


@dataclass(frozen=True)
class MomentSequence:
    """Exact moments ``values[n]`` for n = 0, 1, ...

    ``label`` names the distribution (``"J_{2,1,1}"``, ``"FC_3"``, ...).
    """

    values: tuple[Fraction, ...]
    label: str = ""
    params: ModelParams | None = field(default=None, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "values", tuple(as_rational(v) for v in self.values))

    def __len__(self):
        return len(self.values)

    def __getitem__(self, n):
        return self.values[n]

    def __iter__(self):
        return iter(self.values)

    @property
    def mass(self) -> Fraction:
        return self.values[0]

    def as_floats(self) -> list[float]:
        return [float(v) for v in self.values]


def jacobi_eval(n: int, alpha, beta, x) -> Fraction:
    """Jacobi polynomial P_n^{(alpha, beta)}(x) from its finite hypergeometric sum.

    Works for arbitrary rational (including negative integer) parameters,
    where the classical weight-based definition is unavailable.
    """
    if n < 0:
        raise ValueError("degree must be nonnegative")
    alpha, beta, x = as_rational(alpha), as_rational(beta), as_rational(x)
    t = (x - 1) / 2
    c = n + alpha + beta + 1
    total = Fraction(0)
    tk = Fraction(1)
    for k in range(n + 1):
        total += comb(n, k) * pochhammer(c, k) * pochhammer(alpha + k + 1, n - k) * tk
        tk *= t
    return total / factorial(n)


def _params(params, s=None, a=None) -> ModelParams:
    if isinstance(params, ModelParams):
        return params
    return ModelParams(params, s, Fraction(1) if a is None else a)


def moment_jacobi(params: ModelParams, n: int) -> Fraction:
    """J_{r,s,a}(n) via the varying-parameter Jacobi polynomial."""
    p = _params(params).require_exact()
    if n < 0:
        raise ValueError("n must be nonnegative")
    a = p.a
    if n == 0:
        return a
    idx = VaryingJacobiIndex(n - 1, p.r, p.s)
    base = a ** p.r / (1 + a) ** p.s
    return a / n * base ** n * jacobi_eval(n - 1, idx.alpha, idx.beta, (1 - a) / (1 + a))


def moment_derivative(params: ModelParams, n: int) -> Fraction:
    """J_{r,s,a}(n) as ``(1/n!) d^{n-1}/dz^{n-1} [z^{n(r+1)} (1+z)^{-ns}]`` at z = a.

    The derivative is expanded by Leibniz' rule into falling powers of the
    two factors, so no symbolic differentiation is involved.
    """
    p = _params(params).require_exact()
    if n < 1:
        raise ValueError("the derivative formula needs n >= 1")
    r, s, a = p.r, p.s, p.a
    total = Fraction(0)
    for k in range(n):
        total += (
            comb(n - 1, k)
            * pochhammer(n * r + k + 2, n - 1 - k)
            * a ** (n * r + k + 1)
            * pochhammer(-n * s - k + 1, k)
            / (1 + a) ** (n * s + k)
        )
    return total / factorial(n)


def moment_series(params: ModelParams, n_max: int) -> MomentSequence:
    """Moments 0..n_max as coefficients of the fixed point of
    ``w = a + u w^{r+1} / (1+w)^s``.

    Iteration k fixes coefficient k, so it runs at truncation k+1 instead of
    the full order; the result equals the full-order iteration.
    """
    p = _params(params).require_exact()
    if n_max < 1:
        raise ValueError("n_max must be >= 1")
    r, s, a = p.r, p.s, p.a
    coeffs = [a]
    for k in range(1, n_max + 1):
        w = FormalSeries.from_coefficients(coeffs, k)
        rhs = series_mul(series_power(w, r + 1), series_power(w + 1, -s))
        # w_new = a + u * rhs; only coefficient k is new
        coeffs = [a] + list(rhs.coefficients)
    return MomentSequence(tuple(coeffs), label=f"J_{{{r},{s},{a}}}", params=p)


def moments(params: ModelParams, n_max: int) -> MomentSequence:
    """Moments 0..n_max from the Jacobi closed form."""
    p = _params(params).require_exact()
    vals = tuple(moment_jacobi(p, n) for n in range(n_max + 1))
    return MomentSequence(vals, label=f"J_{{{p.r},{p.s},{p.a}}}", params=p)


def fuss_catalan(r: int, n: int) -> Fraction:
    """FC_r(n) = C((r+1) n, n) / (r n + 1)."""
    if r < 1 or n < 0:
        raise ValueError("need r >= 1 and n >= 0")
    return Fraction(comb((r + 1) * n, n), r * n + 1)


def raney(alpha, beta, n: int) -> Fraction:
    """R_{alpha,beta}(n) = beta / (n alpha + beta) * C(n alpha + beta, n).

    Rational alpha and beta are allowed (R_{1,1/2} is the arcsine law).
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    alpha, beta = as_rational(alpha), as_rational(beta)
    top = n * alpha + beta
    if top == 0:
        raise ZeroDivisionError(f"n*alpha + beta vanishes at n={n}")
    return beta / top * binomial_general(top, n)


def fuss_catalan_sequence(r: int, order: int) -> MomentSequence:
    return MomentSequence(tuple(fuss_catalan(r, n) for n in range(order)), label=f"FC_{r}")


def raney_sequence(alpha, beta, order: int) -> MomentSequence:
    alpha, beta = as_rational(alpha), as_rational(beta)
    vals = tuple(raney(alpha, beta, n) for n in range(order))
    return MomentSequence(vals, label=f"R_{{{alpha},{beta}}}")
