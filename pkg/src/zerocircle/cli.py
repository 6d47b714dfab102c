"""Command-line entry point.

Each subcommand writes ``report.txt`` (``key=value`` lines) plus CSV tables
into ``--out`` (default: ``$ZEROCIRCLE_OUT`` or ``./zerocircle-out``).

CSV columns
-----------
zeros.csv          re, im, modulus
error_grid.csv     re_z, im_z, abs_error
factors.csv        j, nu, xi_re, xi_im, eta_re, eta_im
coefficients.csv   k, re, im
phases.csv         sample, k, phase
tuple_hist.csv     entry, part, bin_left, bin_right, count
probability.csv    eps, r, N, trials, successes, probability, wilson_low, wilson_high

Exit status: 0 success, 2 invalid input, 3 accuracy budget exceeded.
"""
from __future__ import annotations

import argparse
import csv
import os
import sys
import time
from pathlib import Path

import numpy as np

from . import errors
from .blaschke import approximate_blaschke, blaschke_zeros
from .functions import parse_complex, parse_complex_list, parse_function_spec
from .grids import square_grid
from .matching import J_MAX, approximate_to_tolerance, tail_bound, verify_nu_bound
from .rmt import approx_probability, sample_phases, tuple_histograms
from .series import fit_growth_bound, log_derivative
from .transport import (
    approx_blaschke_on_disc,
    approx_poly_on_disc,
    polynomial_roots,
    rubinstein_approx,
    to_disc_spec,
)

EXIT_OK, EXIT_INVALID, EXIT_BUDGET = 0, 2, 3
OUT_ENV = "ZEROCIRCLE_OUT"


def _fmt(x) -> str:
    return f"{float(x):.17g}"


def _write_csv(path: Path, header, rows):
    with open(path, "w", newline="") as fh:
        w = csv.writer(fh, lineterminator="\n")
        w.writerow(header)
        for row in rows:
            w.writerow([_fmt(v) if isinstance(v, (float, np.floating)) else v for v in row])


def _write_report(path: Path, items: dict):
    with open(path, "w") as fh:
        for k, v in items.items():
            if isinstance(v, complex):
                v = f"{_fmt(v.real)}{'+' if v.imag >= 0 else '-'}{_fmt(abs(v.imag))}i"
            elif isinstance(v, (float, np.floating)):
                v = _fmt(v)
            fh.write(f"{k}={v}\n")


def _zero_rows(zeros, center=0.0):
    return [(z.real, z.imag, abs(z - center)) for z in np.asarray(zeros)]


def _error_rows(approx, target, pts):
    err = np.abs(np.asarray(approx(pts)) - np.asarray(target(pts)))
    return [(z.real, z.imag, e) for z, e in zip(pts, err)], float(err.max()), float(err.mean())


def _factor_rows(product):
    return [(f.j, f.nu, f.xi.real, f.xi.imag, f.eta.real, f.eta.imag) for f in product.factors]


def cmd_approx_poly(args, out: Path) -> dict:
    spec = parse_function_spec(args.fn)
    if not 0 < args.r < 1:
        raise ValueError("--r must lie in (0, 1)")
    res = approximate_to_tolerance(spec, spec.series, args.r, args.eps, J_max=args.J_max)
    pts = square_grid(args.r, args.grid)
    rows, emax, emean = _error_rows(res.product, spec, pts)
    zeros = res.product.roots()
    bound = fit_growth_bound(log_derivative(spec.series(res.J + 1)), args.rho, args.kappa_delta)
    tail = float("nan")
    if args.r * bound.kappa < 1:
        rep = verify_nu_bound(res.product, bound)
        tail = tail_bound(res.J, bound.kappa, args.r, rep.Cprime + 1)
    _write_csv(out / "zeros.csv", ["re", "im", "modulus"], _zero_rows(zeros))
    _write_csv(out / "error_grid.csv", ["re_z", "im_z", "abs_error"], rows)
    _write_csv(out / "factors.csv", ["j", "nu", "xi_re", "xi_im", "eta_re", "eta_im"], _factor_rows(res.product))
    return {
        "fn": spec.describe(),
        "r": args.r,
        "eps": args.eps,
        "J": res.J,
        "degree": res.product.degree,
        "leading_constant": complex(res.product.leading_constant),
        "target_radius": 1.0,
        "zero_count": len(zeros),
        "zero_modulus_max_dev": float(np.max(np.abs(np.abs(zeros) - 1))) if len(zeros) else 0.0,
        "error_max": emax,
        "error_mean": emean,
        "grid_points": len(pts),
        "kappa": bound.kappa,
        "tail_bound": tail,
    }


def cmd_approx_blaschke(args, out: Path) -> dict:
    spec = parse_function_spec(args.fn)
    if not 0 < args.r < 1:
        raise ValueError("--r must lie in (0, 1)")
    B, res = approximate_blaschke(spec, spec.series, args.r, args.delta, args.eps, J_max=args.J_max)
    inner = args.r * (1 - args.delta)
    pts = square_grid(inner, args.grid)
    rows, emax, emean = _error_rows(B, spec, pts)
    zeros = blaschke_zeros(B)
    _write_csv(out / "zeros.csv", ["re", "im", "modulus"], _zero_rows(zeros))
    _write_csv(out / "error_grid.csv", ["re_z", "im_z", "abs_error"], rows)
    _write_csv(
        out / "factors.csv",
        ["j", "nu", "alpha_re", "alpha_im", "beta_re", "beta_im"],
        [(t.j, t.nu, t.alpha.real, t.alpha.imag, t.beta.real, t.beta.imag) for t in B.terms],
    )
    return {
        "fn": spec.describe(),
        "r": args.r,
        "delta": args.delta,
        "eps": args.eps,
        "J": res.J,
        "degree": B.degree,
        "log_c_B": complex(B.log_c),
        "target_radius": args.r,
        "zero_count": len(zeros),
        "zero_modulus_max_dev": float(np.max(np.abs(np.abs(zeros) - args.r))) if len(zeros) else 0.0,
        "error_max": emax,
        "error_mean": emean,
        "grid_points": len(pts),
    }


def cmd_transport(args, out: Path) -> dict:
    spec = parse_function_spec(args.fn)
    center = parse_complex(args.center)
    disc = to_disc_spec(center, args.radius)
    report = {
        "fn": spec.describe(),
        "center": center,
        "radius": args.radius,
        "pseudo_a": complex(disc.pseudo_a),
        "pseudo_r": disc.pseudo_r,
        "kind": args.kind,
        "eps": args.eps,
    }
    if args.kind == "poly":
        A = approx_poly_on_disc(spec, disc, args.eps, J_max=args.J_max)
        pts = square_grid(args.radius, args.grid, center)
        zeros, zc, target_radius = A.roots(), 0.0, 1.0
        report.update(J=",".join(str(m.J) for m in A.matches), degree=A.product.degree)
        _write_csv(out / "factors.csv", ["j", "nu", "xi_re", "xi_im", "eta_re", "eta_im"], _factor_rows(A.product))
    else:
        A = approx_blaschke_on_disc(spec, disc, args.delta, args.eps, J_max=args.J_max)
        pts = square_grid(args.radius - args.delta, args.grid, center)
        zeros, zc, target_radius = A.zeros(), center, args.radius
        report.update(delta=args.delta, J=A.match.J, degree=A.blaschke.degree, log_c=complex(A.log_c))
    rows, emax, emean = _error_rows(A, spec, pts)
    _write_csv(out / "zeros.csv", ["re", "im", "modulus"], _zero_rows(zeros, zc))
    _write_csv(out / "error_grid.csv", ["re_z", "im_z", "abs_error"], rows)
    dev = np.abs(np.abs(np.asarray(zeros) - zc) - target_radius)
    report.update(
        target_radius=target_radius,
        zero_count=len(zeros),
        zero_modulus_max_dev=float(dev.max()) if len(dev) else 0.0,
        error_max=emax,
        error_mean=emean,
        grid_points=len(pts),
    )
    return report


def cmd_rubinstein(args, out: Path) -> dict:
    p = parse_complex_list(args.poly)
    q = rubinstein_approx(p, args.k)
    roots = polynomial_roots(q)
    _write_csv(out / "roots.csv", ["re", "im", "modulus"], _zero_rows(roots))
    _write_csv(out / "coefficients.csv", ["k", "re", "im"], [(k, c.real, c.imag) for k, c in enumerate(q)])
    pts = square_grid(args.rho, args.grid)
    P = np.polynomial.polynomial
    diff = np.abs(P.polyval(pts, q) - P.polyval(pts, np.asarray(p, dtype=complex)))
    return {
        "poly": args.poly,
        "k": args.k,
        "degree": len(q) - 1,
        "target_radius": 1.0,
        "root_modulus_max_dev": float(np.max(np.abs(np.abs(roots) - 1))),
        "sup_diff_radius": args.rho,
        "sup_diff": float(diff.max()),
    }


def cmd_rmt_sample(args, out: Path) -> dict:
    if args.N < 1 or args.samples < 1:
        raise ValueError("--N and --samples must be positive")
    if not 0 < args.x < 1:
        raise ValueError("--x must lie in (0, 1)")
    phases = sample_phases(args.N, args.samples, args.seed)
    _write_csv(
        out / "phases.csv",
        ["sample", "k", "phase"],
        [(i, k, float(th)) for i, row in enumerate(phases) for k, th in enumerate(row)],
    )
    rows = tuple_histograms(args.N, args.x, args.n, args.samples, args.seed, args.bins)
    _write_csv(out / "tuple_hist.csv", ["entry", "part", "bin_left", "bin_right", "count"], rows)
    return {"N": args.N, "samples": args.samples, "seed": args.seed, "x": args.x, "n": args.n, "bins": args.bins}


def cmd_rmt_prob(args, out: Path) -> dict:
    spec = parse_function_spec(args.fn)
    if abs(spec.value_at_zero - 1) > 1e-12:
        raise ValueError("characteristic polynomials satisfy Lambda(0) = 1; the target needs f(0) = 1")
    eps_list = [float(e) for e in args.eps.split(",")]
    rows = []
    for eps in eps_list:
        est = approx_probability(spec, args.r, eps, args.N, args.trials, args.seed)
        rows.append((eps, args.r, args.N, args.trials, est.successes, est.probability, est.low, est.high))
    _write_csv(
        out / "probability.csv",
        ["eps", "r", "N", "trials", "successes", "probability", "wilson_low", "wilson_high"],
        rows,
    )
    return {"fn": spec.describe(), "r": args.r, "N": args.N, "trials": args.trials, "seed": args.seed, "eps": args.eps}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="zerocircle", description="Approximation by polynomials and Blaschke products with zeros on a circle."
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, fn=True):
        if fn:
            p.add_argument("--fn", required=True, help="target function (see zerocircle.functions)")
        p.add_argument("--out", default=None, help=f"output directory (default ${OUT_ENV} or ./zerocircle-out)")
        p.add_argument("--grid", type=int, default=41, help="points per side of the error grid")

    p = sub.add_parser("approx-poly", help="polynomial with roots on |z|=1 approximating f on |z| < r")
    common(p)
    p.add_argument("--r", type=float, required=True)
    p.add_argument("--eps", type=float, default=1e-2)
    p.add_argument("--J-max", dest="J_max", type=int, default=J_MAX)
    p.add_argument("--rho", type=float, default=1.0, help="radius where f is analytic and zero-free (for the tail bound)")
    p.add_argument("--kappa-delta", dest="kappa_delta", type=float, default=0.05)
    p.set_defaults(func=cmd_approx_poly)

    p = sub.add_parser("approx-blaschke", help="constant times Blaschke product with zeros on |w|=r")
    common(p)
    p.add_argument("--r", type=float, required=True)
    p.add_argument("--delta", type=float, default=0.1, help="relative margin: error measured on |w| <= r(1-delta)")
    p.add_argument("--eps", type=float, default=1e-2)
    p.add_argument("--J-max", dest="J_max", type=int, default=J_MAX)
    p.set_defaults(func=cmd_approx_blaschke)

    p = sub.add_parser("transport", help="approximate on an off-centre disc D(center, radius)")
    common(p)
    p.add_argument("--center", required=True, help="complex centre, e.g. 0.3+0.1i")
    p.add_argument("--radius", type=float, required=True)
    p.add_argument("--kind", choices=("poly", "blaschke"), default="blaschke")
    p.add_argument("--delta", type=float, default=0.05, help="absolute shrink of the disc (blaschke)")
    p.add_argument("--eps", type=float, default=1e-2)
    p.add_argument("--J-max", dest="J_max", type=int, default=J_MAX)
    p.set_defaults(func=cmd_transport)

    p = sub.add_parser("rubinstein", help="p + z^k p* for p zero-free on the closed unit disc")
    common(p, fn=False)
    p.add_argument("--poly", required=True, help="ascending coefficients, e.g. '-2,1' for z-2")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--rho", type=float, default=0.9, help="radius for the reported sup-difference")
    p.set_defaults(func=cmd_rubinstein)

    p = sub.add_parser("rmt-sample", help="CUE eigenphases and log-derivative tuple histograms")
    common(p, fn=False)
    p.add_argument("--N", type=int, required=True)
    p.add_argument("--samples", type=int, default=1000)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--x", type=float, default=0.5)
    p.add_argument("--n", type=int, default=3)
    p.add_argument("--bins", type=int, default=50)
    p.set_defaults(func=cmd_rmt_sample)

    p = sub.add_parser("rmt-prob", help="empirical probability that Lambda is eps-close to f on |z| < r")
    common(p)
    p.add_argument("--r", type=float, required=True)
    p.add_argument("--eps", required=True, help="comma-separated list")
    p.add_argument("--N", type=int, required=True)
    p.add_argument("--trials", type=int, default=10000)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_rmt_prob)
    return parser


def run(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    out = Path(args.out or os.environ.get(OUT_ENV, "zerocircle-out"))
    t0 = time.perf_counter()
    try:
        out.mkdir(parents=True, exist_ok=True)
        report = args.func(args, out)
    except errors.BudgetExceeded as exc:
        print(f"zerocircle: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except (ValueError, ArithmeticError) as exc:
        print(f"zerocircle: {exc}", file=sys.stderr)
        parser.print_usage(sys.stderr)
        return EXIT_INVALID
    report = {"command": args.command, **report, "elapsed_s": time.perf_counter() - t0}
    _write_report(out / "report.txt", report)
    print(f"wrote {out / 'report.txt'}")
    return EXIT_OK


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
