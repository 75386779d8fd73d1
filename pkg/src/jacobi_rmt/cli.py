"""Command line interface: ``jacobi-rmt <command> [options]``.

Exit codes: 0 success, 1 invalid input, 2 numerical failure.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from fractions import Fraction

from . import __version__, freeconv, moments, rmt, svg, verify
from .moments import ModelParams, ParameterError
from .numkit import exact_str

EXIT_OK, EXIT_INPUT, EXIT_NUMERIC = 0, 1, 2


class InputError(ValueError):
    pass


def _rational(text: str) -> Fraction:
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not an exact rational or decimal: {text!r}")


def _int_list(text: str) -> list[int]:
    try:
        return [int(v) for v in text.split(",") if v.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma separated integers: {text!r}")


def _float(x: float) -> str:
    return f"{x:.17g}"


def envelope(command: str, params: dict, results) -> dict:
    return {"command": command, "version": __version__, "params": params, "results": results}


def _emit(args, command: str, params: dict, results, columns=None, rows=None):
    if args.format == "csv":
        if columns is None:
            raise InputError(f"{command} has no csv form; use --format json")
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(columns)
        w.writerows(rows)
        text = buf.getvalue()
    else:
        text = json.dumps(envelope(command, params, results), indent=2) + "\n"
    if args.out:
        with open(args.out, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _params(args) -> ModelParams:
    return ModelParams(args.r, args.s, args.a)


def _moment_rows(values):
    return [(n, exact_str(v), _float(float(v))) for n, v in enumerate(values)]


def cmd_moments(args):
    p = _params(args)
    if args.n_max < 0:
        raise InputError("--n-max must be nonnegative")
    vals = [moments.moment_jacobi(p, n) for n in range(args.n_max + 1)]
    rows = _moment_rows(vals)
    results = [{"n": n, "exact": e, "value": float(v)} for (n, e, _), v in zip(rows, vals)]
    _emit(args, "moments",
          {"r": p.r, "s": p.s, "a": exact_str(p.a), "n_max": args.n_max},
          results, ["n", "exact", "value"], rows)


def cmd_endpoints(args):
    from .spectral.support import endpoints

    p = _params(args).require_density()
    sup = endpoints(p)
    rec = {"w_star": sup.w_star, "x_star": sup.x_star, "w_tilde": sup.w_tilde,
           "x_tilde": sup.x_tilde}
    row = [_float(v) if v is not None else "none" for v in rec.values()]
    _emit(args, "endpoints", {"r": p.r, "s": p.s, "a": exact_str(p.a)}, rec,
          list(rec), [row])


def density_curve(p: ModelParams, points: int):
    """Interior grid ``x_i = x* i / (points + 1)`` and the density there."""
    from .spectral.density import density_grid
    from .spectral.support import endpoints

    if points < 1:
        raise InputError("--points must be >= 1")
    xs_ = endpoints(p).x_star
    grid = [xs_ * i / (points + 1) for i in range(1, points + 1)]
    return density_grid(p, grid)


def cmd_density(args):
    p = _params(args).require_density()
    if args.points < 2:
        raise InputError("--points must be >= 2")
    samples = density_curve(p, args.points)
    rows = [(_float(d.x), _float(d.rho)) for d in samples]
    results = [{"x": d.x, "rho": d.rho} for d in samples]
    _emit(args, "density",
          {"r": p.r, "s": p.s, "a": exact_str(p.a), "points": args.points},
          results, ["x", "rho"], rows)


def parse_factor(token: str, order: int) -> moments.MomentSequence:
    """``fc:<r>``, ``raney:<alpha>:<beta>`` or ``jacobi:<r>:<s>`` (mass one)."""
    parts = token.strip().split(":")
    kind = parts[0].lower()
    try:
        if kind == "fc" and len(parts) == 2:
            return moments.fuss_catalan_sequence(int(parts[1]), order)
        if kind == "raney" and len(parts) == 3:
            alpha, beta = Fraction(parts[1]), Fraction(parts[2])
            return moments.raney_sequence(alpha, beta, order)
        if kind == "jacobi" and len(parts) == 3:
            p = ModelParams(int(parts[1]), int(parts[2]), 1)
            return moments.moments(p, order - 1)
    except (ValueError, ZeroDivisionError) as exc:
        raise InputError(f"bad factor {token!r}: {exc}")
    raise InputError(f"malformed factor token {token!r}")


def cmd_convolve(args):
    if args.order < 2:
        raise InputError("--order must be >= 2")
    tokens = [t for t in args.factors.split(",") if t.strip()]
    if not tokens:
        raise InputError("need at least one factor")
    factors = [parse_factor(t, args.order) for t in tokens]
    for t, f in zip(tokens, factors):
        if f[0] != 1:
            raise InputError(f"factor {t!r} does not have mass one")
    prod = freeconv.free_product(factors, args.order)
    rows = _moment_rows(prod.values)
    results = [{"n": n, "exact": e, "value": float(v)}
               for (n, e, _), v in zip(rows, prod.values)]
    _emit(args, "convolve", {"factors": tokens, "order": args.order}, results,
          ["n", "exact", "value"], rows)


def cmd_simulate(args):
    cfg = rmt.EnsembleConfig(
        n=args.n, r=args.r, s=args.s,
        nu=tuple(args.nu) if args.nu is not None else None,
        kappa=tuple(args.kappa) if args.kappa is not None else None,
        trials=args.trials, seed=args.seed, k_max=args.k_max,
    )
    if cfg.trials < 2:
        raise InputError("--trials must be >= 2")
    if args.bins < 1:
        raise InputError("--bins must be >= 1")
    if args.format == "csv":
        raise InputError("simulate writes json only")
    report = rmt.run_experiment(cfg, workers=args.workers)
    results = report.to_dict()
    _emit(args, "simulate", dict(results["config"], bins=args.bins), results)
    if args.svg:
        p = ModelParams(cfg.r, cfg.s, 1)
        curve = density_curve(p, args.curve_points)
        eig = [float(v) for sp in report.spectra for v in sp.eigenvalues]
        text = svg.render(
            eig, [d.x for d in curve], [d.rho for d in curve],
            x_max=1.1 * report.x_star, bins=args.bins,
            title=f"n={cfg.n} r={cfg.r} s={cfg.s} trials={cfg.trials} seed={cfg.seed}",
        )
        with open(args.svg, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)


def cmd_verify(args):
    checks = verify.run(args.suite)
    failed = [c for c in checks if not c.passed]
    results = {
        "suite": args.suite,
        "total": len(checks),
        "failed": len(failed),
        "checks": [{"suite": c.suite, "name": c.name, "passed": c.passed, "detail": c.detail}
                   for c in checks],
    }
    rows = [(c.suite, c.name, "pass" if c.passed else "FAIL", c.detail) for c in checks]
    _emit(args, "verify", {"suite": args.suite}, results,
          ["suite", "check", "status", "detail"], rows)
    return EXIT_OK if not failed else EXIT_NUMERIC


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "csv"), default="json")
    common.add_argument("--out", help="write to this file instead of stdout")

    model = argparse.ArgumentParser(add_help=False)
    model.add_argument("-r", "--r", type=int, required=True)
    model.add_argument("-s", "--s", type=int, required=True)
    model.add_argument("-a", "--a", type=_rational, default=Fraction(1),
                       help="positive rational, e.g. 1/2 or 0.25 (default 1)")

    parser = argparse.ArgumentParser(prog="jacobi-rmt", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("moments", parents=[common, model], help="exact moments J_{r,s,a}(n)")
    p.add_argument("--n-max", "--order", dest="n_max", type=int, default=10)
    p.set_defaults(func=cmd_moments)

    p = sub.add_parser("endpoints", parents=[common, model], help="support endpoints")
    p.set_defaults(func=cmd_endpoints)

    p = sub.add_parser("density", parents=[common, model], help="density on an interior grid")
    p.add_argument("--points", type=int, default=99)
    p.set_defaults(func=cmd_density)

    p = sub.add_parser("convolve", parents=[common],
                       help="moments of a free multiplicative product")
    p.add_argument("factors", help="comma list of fc:<r> | raney:<alpha>:<beta> | jacobi:<r>:<s>")
    p.add_argument("--order", type=int, default=10, help="number of moments (m_0..m_{order-1})")
    p.set_defaults(func=cmd_convolve)

    p = sub.add_parser("simulate", parents=[common], help="Monte Carlo against J_{r,s,1}")
    p.add_argument("--n", type=int, default=200)
    p.add_argument("-r", "--r", type=int, required=True)
    p.add_argument("-s", "--s", type=int, required=True)
    p.add_argument("--nu", type=_int_list, default=None, help="nu_0..nu_r (default zeros)")
    p.add_argument("--kappa", type=_int_list, default=None,
                   help="kappa_1..kappa_s with l_j = 2n + kappa_j")
    p.add_argument("--trials", type=int, default=50)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--k-max", type=int, default=4)
    p.add_argument("--bins", type=int, default=60)
    p.add_argument("--curve-points", type=int, default=200)
    p.add_argument("--svg", help="write histogram + density overlay here")
    p.add_argument("--workers", type=int, default=1)
    p.set_defaults(func=cmd_simulate)

    p = sub.add_parser("verify", parents=[common], help="run self-check suites")
    p.add_argument("suite", choices=verify.SUITES + ("all",))
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_OK
    try:
        code = args.func(args)
    except (InputError, ParameterError, rmt.ConfigError, freeconv.TransformError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except ArithmeticError as exc:
        print(f"numerical failure: {exc}", file=sys.stderr)
        return EXIT_NUMERIC
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    return code or EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
