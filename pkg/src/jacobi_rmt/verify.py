"""Self-check suites behind ``jacobi-rmt verify``.

Each suite returns a list of :class:`Check`; failures are reported, never
raised.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import freeconv, moments
from .moments import ModelParams

A_VALUES = (Fraction(1, 2), Fraction(1), Fraction(2))
SUITES = ("oracles", "positivity", "special", "quadrature", "factorization")


@dataclass(frozen=True)
class Check:
    suite: str
    name: str
    passed: bool
    detail: str = ""


def _lattice(r_max=6, strict=False):
    for r in range(1, r_max + 1):
        for s in range(0, r if strict else r + 1):
            for a in A_VALUES:
                yield ModelParams(r, s, a)


def oracles(r_max: int = 6, n_max: int = 20) -> list[Check]:
    """Jacobi form, Leibniz form and fixed-point series agree exactly."""
    out = []
    for p in _lattice(r_max):
        ser = moments.moment_series(p, n_max)
        bad = [n for n in range(1, n_max + 1)
               if not moments.moment_jacobi(p, n) == moments.moment_derivative(p, n) == ser[n]]
        out.append(Check("oracles", f"r={p.r} s={p.s} a={p.a}", not bad,
                         f"mismatch at n={bad}" if bad else ""))
    return out


def positivity(r_max: int = 6, n_max: int = 20) -> list[Check]:
    out = []
    for p in _lattice(r_max):
        bad = [n for n in range(n_max + 1) if not moments.moment_jacobi(p, n) > 0]
        out.append(Check("positivity", f"r={p.r} s={p.s} a={p.a}", not bad,
                         f"nonpositive at n={bad}" if bad else ""))
    return out


def special(r_max: int = 6, n_max: int = 20) -> list[Check]:
    """J_{r,0,1} = FC_r and J_{r,1,1} = R_{(r+1)/2, 1/2}."""
    out = []
    for r in range(1, r_max + 1):
        p0, p1 = ModelParams(r, 0, 1), ModelParams(r, 1, 1)
        ok0 = all(moments.moment_jacobi(p0, n) == moments.fuss_catalan(r, n)
                  for n in range(n_max + 1))
        ok1 = all(moments.moment_jacobi(p1, n)
                  == moments.raney(Fraction(r + 1, 2), Fraction(1, 2), n)
                  for n in range(n_max + 1))
        out.append(Check("special", f"J_{{{r},0,1}} = FC_{r}", ok0))
        out.append(Check("special", f"J_{{{r},1,1}} = R_{{{r + 1}/2,1/2}}", ok1))
    return out


def quadrature(r_max: int = 4, n_max: int = 10, rtol: float = 1e-7,
               mass_tol: float = 1e-8) -> list[Check]:
    """Moments of the computed density match the exact sequence."""
    from .spectral.density import quadrature_moments

    out = []
    for p in _lattice(r_max, strict=True):
        try:
            q = quadrature_moments(p, n_max)
        except ArithmeticError as exc:
            out.append(Check("quadrature", f"r={p.r} s={p.s} a={p.a}", False, str(exc)))
            continue
        exact = [float(moments.moment_jacobi(p, n)) for n in range(n_max + 1)]
        errs = [abs(q[n] - exact[n]) / exact[n] for n in range(n_max + 1)]
        ok = abs(q[0] - exact[0]) <= mass_tol and max(errs[1:]) <= rtol
        out.append(Check("quadrature", f"r={p.r} s={p.s} a={p.a}", ok,
                         f"max rel err {max(errs):.2e}"))
    return out


def factorization(r_max: int = 6, order: int = 16) -> list[Check]:
    out = []
    for r in range(1, r_max + 1):
        for s in range(r):
            rep = freeconv.verify_factorization(r, s, order)
            bad = [n for n, ok in enumerate(rep.per_coefficient) if not ok]
            out.append(Check("factorization", f"r={r} s={s}", rep.passed,
                             f"mismatch at n={bad}" if bad else ""))
    return out


def run(suite: str) -> list[Check]:
    if suite == "all":
        checks = []
        for name in SUITES:
            checks.extend(run(name))
        return checks
    if suite not in SUITES:
        raise ValueError(f"unknown suite {suite!r}; choose from {SUITES + ('all',)}")
    return globals()[suite]()
