"""Command-line front end.

    qcbounds eval <fn> [--r R] [--K K] [--n N] [--t T] [--s S] [--y Y] [--a A] [--b B]
    qcbounds bound <name> --n N --K K [--s S] [--diam D] [--U U] [--CD C] ...
    qcbounds figure <fig3|fig4> --k-min A --k-max B --steps M [--out PATH]
    qcbounds verify --suite <identities|theorems|metrics|all> [--tol T]

Exit status: 0 on success, 1 when a verification check fails, 2 on usage or
domain errors (with a one-line message on stderr).
"""

from __future__ import annotations

import argparse
import sys
from dataclasses import dataclass

from . import distortion_bounds as db
from . import ring_invariants as ri
from . import special_functions as sf
from .errors import DomainError, UnsupportedOperationError
from .ring_invariants import RealInterval
from .verification import SUITES, emit_figure, run_suite

__all__ = ["CliConfig", "format_value", "main", "run"]


class UsageError(Exception):
    pass


@dataclass(frozen=True)
class CliConfig:
    tolerance: float = 1e-12
    output: str | None = None
    precision: int = 15

    def __post_init__(self):
        if not self.tolerance > 0:
            raise UsageError("--tol must be positive")
        if not 1 <= self.precision <= 17:
            raise UsageError("--precision must lie in 1..17")


def format_value(v, precision: int = 15) -> str:
    if isinstance(v, RealInterval):
        if v.is_degenerate:
            return format_value(v.lo, precision)
        return f"{format_value(v.lo, precision)},{format_value(v.hi, precision)}"
    v = float(v)
    if v == 0.0:
        return "0"
    return f"{v:.{precision}g}"


def _need(args, *names):
    for name in names:
        if getattr(args, name) is None:
            raise UsageError(f"missing required option --{name.replace('_', '-')}")
    return [getattr(args, name) for name in names]


# name -> (required options, callable taking the parsed args)
EVAL_FUNCTIONS = {
    "agm": (("a", "b"), lambda a: sf.agm(a.a, a.b)),
    "ellipk": (("r",), lambda a: sf.ellipk(a.r)),
    "mu": (("r",), lambda a: sf.mu(a.r)),
    "mu_inv": (("y",), lambda a: sf.mu_inv(a.y, a.tol or sf.DEFAULT_TOL)),
    "gamma2": (("s",), lambda a: ri.gamma2(a.s)),
    "tau2": (("t",), lambda a: ri.tau2(a.t)),
    "phi": (("K", "r"), lambda a: _phi(a)),
    "phi_inv": (("K", "r"), lambda a: ri.phi_lower_family(a.K, a.n or 2, a.r)),
    "lambda": ((), lambda a: ri.lambda_bounds(a.n or 2)),
    "eta": (("K", "t"), lambda a: ri.eta_interval(a.K, a.n or 2, a.t)),
    "h1": (("t",), lambda a: db.h1(a.t)),
    "k_threshold": ((), lambda a: db.k_threshold(a.n or 2)),
}


def _phi(a):
    n = a.n or 2
    if n == 2:
        return ri.phi2(a.K, a.r)
    return ri.phi_upper_family(a.K, n, a.r)


def _holder(a, which):
    hc = db.holder_constants(a.n, a.K)
    return getattr(hc, which)


BOUNDS = {
    "mv": (("n", "K"), lambda a: db.bound_mv(a.n, a.K)),
    "vz": (("n", "K"), lambda a: db.bound_vz(a.n, a.K)),
    "vz_alt": (("n", "K"), lambda a: db.bound_vz_alt(a.n, a.K)),
    "krzyz": (("K",), lambda a: db.bound_krzyz(a.K)),
    "convex_j": (("n", "K"), lambda a: db.bound_convex_j(a.n, a.K, 1.0 / 3.0 if a.s is None else a.s)),
    "convex_small_k": (("n", "K"), lambda a: db.bound_convex_small_k(a.n, a.K)),
    "ball_k_small": (("n", "K"), lambda a: db.bound_ball_k_small(a.n, a.K)),
    "bounded_domain": (("n", "K", "diam"), lambda a: db.bound_bounded_domain(a.n, a.K, a.diam)),
    "convex_kd": (("n", "K", "U"), lambda a: db.bound_convex_kd(a.n, a.K, a.U)),
    "uniformly_perfect": (("K", "CD"), lambda a: db.bound_planar_uniformly_perfect(a.K, a.CD)),
    "lower_K_uniform": (
        ("n", "U", "s", "aseev_C", "k"),
        lambda a: db.lower_bound_K_uniform(a.n, a.U, a.s, a.aseev_C, a.k),
    ),
    "axis_fixed": (("n", "K"), lambda a: db.bound_axis_fixed(a.n, a.K)),
    "holder_m1": (("n", "K"), lambda a: _holder(a, "M1")),
    "holder_m2": (("n", "K"), lambda a: _holder(a, "M2")),
    "holder_c": (("n", "K"), lambda a: _holder(a, "C_alpha")),
    "holder_r0": (("n", "K"), lambda a: _holder(a, "R0")),
    "fv": (("K",), lambda a: db.fv_bound(a.K)),
    "bv": (("K",), lambda a: db.bv_bound(a.K)),
    "mori": (("K",), lambda a: db.mori_conjecture(a.K)),
    "planar_remark": (("K",), lambda a: db.planar_remark_bound(a.K)),
}


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _add_common(p):
    p.add_argument("--precision", type=int, default=15, help="significant digits (1..17)")
    p.add_argument("--tol", type=float, default=None, help="tolerance")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="qcbounds", description="Quasiconformal distortion bounds and checks.")
    sub = parser.add_subparsers(dest="command", parser_class=_Parser)
    sub.required = True

    p = sub.add_parser("eval", help="evaluate a special function")
    p.add_argument("fn", choices=sorted(EVAL_FUNCTIONS))
    for name in ("r", "K", "t", "s", "y", "a", "b"):
        p.add_argument(f"--{name}", type=float)
    p.add_argument("--n", type=int)
    _add_common(p)

    p = sub.add_parser("bound", help="evaluate a named theorem bound")
    p.add_argument("name", choices=sorted(BOUNDS))
    p.add_argument("--n", type=int)
    p.add_argument("--K", type=float)
    p.add_argument("--s", type=float)
    p.add_argument("--diam", type=float)
    p.add_argument("--U", type=float)
    p.add_argument("--CD", type=float)
    p.add_argument("--aseev-C", dest="aseev_C", type=float)
    p.add_argument("--k", type=float, help="quasihyperbolic distance k_D(x, f(x))")
    _add_common(p)

    p = sub.add_parser("figure", help="write figure curve data as CSV")
    p.add_argument("figure", choices=["fig3", "fig4"])
    p.add_argument("--k-min", type=float, required=True)
    p.add_argument("--k-max", type=float, required=True)
    p.add_argument("--steps", type=int, required=True)
    p.add_argument("--spacing", choices=["linear", "log"], default="linear")
    p.add_argument("--out")
    _add_common(p)

    p = sub.add_parser("verify", help="run a verification suite")
    p.add_argument("--suite", choices=list(SUITES), required=True)
    _add_common(p)
    return parser


def _run(argv, out) -> int:
    args = build_parser().parse_args(argv)
    cfg = CliConfig(
        tolerance=sf.DEFAULT_TOL if args.tol is None else args.tol,
        output=getattr(args, "out", None),
        precision=args.precision,
    )
    if args.command == "eval":
        needed, fn = EVAL_FUNCTIONS[args.fn]
        _need(args, *needed)
        print(format_value(fn(args), cfg.precision), file=out)
        return 0

    if args.command == "bound":
        needed, fn = BOUNDS[args.name]
        _need(args, *needed)
        print(format_value(fn(args), cfg.precision), file=out)
        return 0

    if args.command == "figure":
        table = emit_figure(args.figure, args.k_min, args.k_max, args.steps, args.spacing)
        text = table.to_csv(cfg.precision)
        if cfg.output:
            with open(cfg.output, "w", newline="") as fh:
                fh.write(text)
        else:
            out.write(text)
        return 0

    report = run_suite(args.suite, args.tol)
    for line in report.lines(cfg.precision):
        print(line, file=out)
    return 0 if report.passed else 1


def run(argv=None, out=None, err=None) -> int:
    """Run the CLI on ``argv`` and return the exit code."""
    out = sys.stdout if out is None else out
    err = sys.stderr if err is None else err
    try:
        return _run(sys.argv[1:] if argv is None else list(argv), out)
    except (UsageError, DomainError, UnsupportedOperationError, OverflowError) as exc:
        msg = " ".join(str(exc).split())
        print(f"qcbounds: error: {msg}", file=err)
        return 2


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
