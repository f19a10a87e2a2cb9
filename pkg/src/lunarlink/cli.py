"""Command-line entry point: linkbudget, bound, ba, sweep, validate."""

from __future__ import annotations

import argparse
import configparser
import math
import sys
from pathlib import Path

from . import blahut_arimoto as ba_mod
from .capacity_bounds import (RationalAlpha, ergodic_capacity_lb_meijerg,
                              ergodic_capacity_lb_quadrature, outage_ub)
from .errors import UnsupportedOrderError
from .link_budget import BANDS, NORMALIZATIONS, evaluate_link, from_db
from .mc_oracle import DEFAULT_SEED, McConfig, validate
from .scenario import ScenarioConfig, emit_csv, emit_plots, run_sweep
from .snr_model import SnrDistribution

EXIT_OK, EXIT_VALIDATION, EXIT_USAGE = 0, 1, 2

EQ14_MESSAGE = (
    "--paper-eq14-literal is not supported: dividing the square root by d_M^2 makes the "
    "Moon solid angle dimension-dependent (it tends to 2*pi for any d_M in metres). The "
    "spherical-cap form 2*pi*(1 - sqrt(d_M^2 - R_M^2)/d_M) is always used.")


class UsageError(Exception):
    pass


def float_list(text: str) -> tuple:
    return tuple(float(v) for v in text.replace(",", " ").split())


def str_list(text: str) -> tuple:
    return tuple(v for v in text.replace(",", " ").split())


def float_range(text: str) -> tuple:
    """``start:step:stop`` (inclusive) or a comma list."""
    if ":" in text:
        start, step, stop = (float(v) for v in text.split(":"))
        if step <= 0:
            raise argparse.ArgumentTypeError("range step must be positive")
        n = int(math.floor((stop - start) / step + 1e-9)) + 1
        return tuple(start + i * step for i in range(n))
    return float_list(text)


def _common(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--config", type=Path, help="key = value file; CLI flags override it")
    parser.add_argument("--seed", type=int, default=DEFAULT_SEED)
    parser.add_argument("--out", type=Path, default=Path("."), help="output directory")
    parser.add_argument("--gains", choices=("table", "computed"), default="table")
    parser.add_argument("--normalization", choices=NORMALIZATIONS, default="complex")
    parser.add_argument("--format", choices=("csv",), default="csv")
    parser.add_argument("--paper-eq14-literal", action="store_true", help=argparse.SUPPRESS)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="lunarlink", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("linkbudget", help="one-shot link budget report")
    _common(p)
    p.add_argument("--band", choices=sorted(BANDS), default="Ka")
    p.add_argument("--distance", type=float, default=1e7)
    p.add_argument("--p-t", type=float, default=1.0)
    p.add_argument("--t-b", type=float, default=0.0)
    p.add_argument("--alpha", type=float, default=2.0)

    p = sub.add_parser("bound", help="single-point ergodic or outage bound")
    _common(p)
    p.add_argument("kind", choices=("ergodic", "outage"))
    p.add_argument("--alpha", type=float, default=2.0)
    p.add_argument("--m", type=float, default=1.0)
    p.add_argument("--gamma-bar", type=float, default=10.0)
    p.add_argument("--gamma-th-db", type=float, default=10.0)
    p.add_argument("--method", choices=("quadrature", "meijerg"), default="quadrature")

    p = sub.add_parser("ba", help="Blahut-Arimoto ergodic capacity")
    _common(p)
    defaults = ba_mod.BaConfig()
    p.add_argument("--alpha", type=float, default=2.0)
    p.add_argument("--m", type=float, default=1.0)
    p.add_argument("--p-c", type=float, default=defaults.p_c)
    p.add_argument("--lambda-n", type=float, default=1.0 / math.sqrt(2.0))
    p.add_argument("--m-x", type=int, default=defaults.m_x)
    p.add_argument("--m-n", type=int, default=defaults.m_n)
    p.add_argument("--n-h", type=int, default=defaults.n_h)
    p.add_argument("--x-max-factor", type=float, default=defaults.x_max_factor)
    p.add_argument("--epsilon", type=float, default=defaults.epsilon)
    p.add_argument("--max-iter", type=int, default=defaults.max_iter)

    p = sub.add_parser("sweep", help="grid sweep to CSV and SVG plots")
    _common(p)
    p.add_argument("--bands", type=str_list, default=("Ka", "S"))
    p.add_argument("--t-b-grid", type=float_range, default=float_range("0:25:600"))
    p.add_argument("--alphas", type=float_list, default=(1.8, 1.9, 2.0))
    p.add_argument("--ms", type=float_list, default=(1.0, 5.0, 15.0))
    p.add_argument("--distances", type=float_list, default=(1e7, 7e7))
    p.add_argument("--p-t", type=float_list, default=(1.0, 10.0))
    p.add_argument("--gamma-th-db", type=float, default=None,
                   help="single threshold for every panel (default: per-panel presets)")
    p.add_argument("--no-plots", action="store_true")

    p = sub.add_parser("validate", help="Monte-Carlo oracle suite")
    _common(p)
    p.add_argument("--n-samples", type=int, default=1_000_000)
    p.add_argument("--confidence-z", type=float, default=3.0)
    return parser


def _read_config(path: Path) -> dict:
    cp = configparser.ConfigParser(inline_comment_prefixes=("#",))
    try:
        cp.read_string("[top]\n" + path.read_text(encoding="utf-8"))
    except (OSError, configparser.Error) as exc:
        raise UsageError(f"cannot read config {path}: {exc}") from exc
    return {k.replace("-", "_"): v for k, v in cp["top"].items()}


def _subparser(parser, command):
    action = next(a for a in parser._actions if isinstance(a, argparse._SubParsersAction))
    return action.choices[command]


def parse_args(argv=None) -> argparse.Namespace:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.config is None:
        return args
    sub = _subparser(parser, args.command)
    known = {a.dest: a for a in sub._actions}
    overrides = {}
    for key, value in _read_config(args.config).items():
        if key not in known or key in ("config", "kind", "help"):
            raise UsageError(f"unknown config key '{key}'")
        action = known[key]
        if isinstance(action, argparse._StoreTrueAction):
            overrides[key] = value.strip().lower() in ("1", "true", "yes", "on")
        else:
            overrides[key] = value
    sub.set_defaults(**overrides)
    return parser.parse_args(argv)


def _write(path: Path, header: str, rows) -> None:
    path.parent.mkdir(parents=True, exist_ok=True)
    with path.open("w", encoding="utf-8") as fh:
        fh.write(header + "\n")
        for row in rows:
            fh.write(",".join(v if isinstance(v, str) else format(v, ".16e") for v in row) + "\n")


def cmd_linkbudget(args) -> int:
    r = evaluate_link(BANDS[args.band], args.distance, args.p_t, args.t_b, args.alpha,
                      args.gains, args.normalization)
    lines = [
        ("band", r.band), ("distance_m", r.distance), ("p_t_w", r.p_t), ("t_b_k", r.t_b),
        ("g_t_dbi", r.g_t_db), ("g_r_dbi", r.g_r_db), ("p_r_dbw", r.p_r_dbw),
        ("omega_moon_sr", r.omega_m), ("omega_antenna_sr", r.omega_a),
        ("delta_t_ext_k", r.delta_t_ext), ("t_op_k", r.budget.t_op), ("n0_w_per_hz", r.budget.n0),
        ("noise_power_w", r.budget.noise_power), ("sigma", r.budget.sigma),
        ("lambda_n", r.budget.lambda_n), ("p_c", r.p_c),
    ]
    for k, v in lines:
        print(f"{k:18s} {v if isinstance(v, str) else format(v, '.6g')}")
    return EXIT_OK


def cmd_bound(args) -> int:
    dist = SnrDistribution.from_gamma_bar(args.alpha, args.m, args.gamma_bar)
    if args.kind == "outage":
        print(format(outage_ub(dist, from_db(args.gamma_th_db)), ".10g"))
        return EXIT_OK
    if args.method == "meijerg":
        try:
            value = ergodic_capacity_lb_meijerg(dist, RationalAlpha.from_alpha(args.alpha))
        except UnsupportedOrderError as exc:
            print(f"warning: {exc}", file=sys.stderr)
            value = ergodic_capacity_lb_quadrature(dist)
    else:
        value = ergodic_capacity_lb_quadrature(dist)
    print(format(value, ".10g"))
    return EXIT_OK


def cmd_ba(args) -> int:
    cfg = ba_mod.BaConfig(p_c=args.p_c, epsilon=args.epsilon, max_iter=args.max_iter,
                          m_x=args.m_x, m_n=args.m_n, x_max_factor=args.x_max_factor,
                          n_h=args.n_h)
    dist = SnrDistribution.from_physical(args.p_c, args.lambda_n, args.alpha, args.m)
    cap = ba_mod.ergodic_ba(args.alpha, args.lambda_n, dist, cfg)
    bound = ergodic_capacity_lb_quadrature(dist)
    path = args.out / "ba.csv"
    _write(path, "alpha,m,p_c,lambda_n,gamma_bar,ba_bpcu,bound_bpcu",
           [(args.alpha, args.m, args.p_c, args.lambda_n, dist.gamma_bar, cap, bound)])
    print(f"ba={cap:.6f} bpcu  bound={bound:.6f} bpcu  -> {path}")
    return EXIT_OK


def cmd_sweep(args) -> int:
    cfg = ScenarioConfig(bands=args.bands, t_b_grid=args.t_b_grid, alpha_set=args.alphas,
                         m_set=args.ms, distances=args.distances, p_t_set=args.p_t,
                         gamma_th_db=args.gamma_th_db, gains_mode=args.gains,
                         normalization=args.normalization)
    failures = []
    rows = run_sweep(cfg, failures)
    args.out.mkdir(parents=True, exist_ok=True)
    meta = {"gains_mode": args.gains, "normalization": args.normalization,
            "gamma_th_db": "per-panel" if args.gamma_th_db is None else args.gamma_th_db}
    path = emit_csv(rows, args.out / "sweep.csv", meta)
    print(f"{len(rows)} rows -> {path}")
    if not args.no_plots:
        files = emit_plots(rows, args.out / "fig_")
        print(f"{len(files)} plots -> {args.out}")
    for key, msg in failures:
        print(f"failed {key}: {msg}", file=sys.stderr)
    return EXIT_OK if not failures else EXIT_VALIDATION


def cmd_validate(args) -> int:
    report = validate(McConfig(n_samples=args.n_samples, seed=args.seed,
                               confidence_z=args.confidence_z))
    for c in report.checks:
        print(f"{'PASS' if c.passed else 'FAIL'}  {c.name}: {c.detail}")
    n_ok = sum(c.passed for c in report.checks)
    print(f"{n_ok}/{len(report.checks)} checks passed")
    return EXIT_OK if report.passed else EXIT_VALIDATION


COMMANDS = {"linkbudget": cmd_linkbudget, "bound": cmd_bound, "ba": cmd_ba,
            "sweep": cmd_sweep, "validate": cmd_validate}


def main(argv=None) -> int:
    try:
        args = parse_args(argv)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except SystemExit as exc:
        return int(exc.code or 0)
    if args.paper_eq14_literal:
        print(f"error: {EQ14_MESSAGE}", file=sys.stderr)
        return EXIT_USAGE
    try:
        return COMMANDS[args.command](args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except RuntimeError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_VALIDATION


if __name__ == "__main__":
    sys.exit(main())
