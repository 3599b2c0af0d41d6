"""Command-line interface: analyze / sweep / simulate / verify.

Exit codes: 0 success, 1 usage error, 2 invalid state or matrix,
3 verification failure.  Output is deterministic for a fixed argument list
(including the seed), so documented examples reproduce byte-for-byte.
The WPI_POL_TOL environment variable overrides the default validity
tolerance.
"""

from __future__ import annotations

import argparse
import math
import os
import sys

from . import verify
from .duality import duality_report, sweep, sweep_to_csv
from .errors import StateValidationError
from .ioutil import dumps
from .linalg import TOL_VALID
from .polarimeter import DEFAULT_SETTINGS, AnalyzerSetting, tomograph
from .polarization import (FieldScale, degree_of_polarization, polarization_matrix,
                           stokes_from_gamma)
from .states import AmplitudePair, build_rho, rho_from_json


class _Parser(argparse.ArgumentParser):
    # usage errors exit 1 (argparse default is 2, which we reserve for
    # invalid physical input)
    def error(self, message):
        self.exit(1, f"{self.prog}: error: {message}\n")


def _parse_grid(text: str) -> list[float]:
    """Either a single float or start:end:step, endpoints inclusive."""
    if ":" not in text:
        return [float(text)]
    parts = text.split(":")
    if len(parts) != 3:
        raise ValueError(f"grid must be VALUE or START:END:STEP, got {text!r}")
    start, end, step = (float(p) for p in parts)
    if step <= 0:
        raise ValueError("grid step must be positive")
    values = []
    k = 0
    while True:
        v = start + k * step
        if v > end + 1e-12:
            break
        values.append(min(v, end))
        k += 1
    return values


def _load_state(args, tol: float):
    has_params = args.alpha1_sq is not None or args.indist is not None
    if args.input is not None:
        if has_params:
            raise UsageError("give either --input or (--alpha1-sq and --indist), not both")
        with open(args.input, "r", encoding="utf-8") as fh:
            return rho_from_json(fh.read(), tol=tol)
    if args.alpha1_sq is None or args.indist is None:
        raise UsageError("state required: --input FILE or both --alpha1-sq and --indist")
    if not 0.0 <= args.alpha1_sq <= 1.0:
        raise UsageError("--alpha1-sq must lie in [0, 1]")
    amps = AmplitudePair(math.sqrt(args.alpha1_sq), math.sqrt(1.0 - args.alpha1_sq), tol=tol)
    return build_rho(amps, args.indist)


class UsageError(Exception):
    pass


def _add_state_args(p):
    p.add_argument("--input", metavar="FILE", help="density matrix JSON file")
    p.add_argument("--alpha1-sq", type=float, dest="alpha1_sq",
                   help="path-1 probability |a1|^2 in [0, 1]")
    p.add_argument("--indist", type=float, help="degree of indistinguishability in [0, 1]")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="wpipol",
                     description="Which-path information vs degree of polarization toolkit")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p_an = sub.add_parser("analyze", help="duality report, Gamma, and Stokes vector for one state")
    _add_state_args(p_an)
    p_an.add_argument("--c-sq", type=float, default=1.0, dest="c_sq",
                      help="field intensity scale |C|^2 (default 1)")

    p_sw = sub.add_parser("sweep", help="tabulate the duality relations over parameter grids")
    p_sw.add_argument("--alpha1-sq", required=True, dest="alpha1_sq",
                      help="grid: VALUE or START:END:STEP")
    p_sw.add_argument("--indist", required=True, help="grid: VALUE or START:END:STEP")
    p_sw.add_argument("--format", choices=("csv", "json"), default="csv")

    p_si = sub.add_parser("simulate", help="Monte Carlo polarimetry of one state")
    _add_state_args(p_si)
    p_si.add_argument("--shots", type=int, default=1_000_000, help="shots per analyzer setting")
    p_si.add_argument("--seed", type=int, default=0)
    p_si.add_argument("--setting", action="append", metavar="THETA,DELTA",
                      help="analyzer setting in radians; give exactly 4 to override H,V,D,R")
    p_si.add_argument("--analytic", action="store_true",
                      help="use exact Born probabilities instead of sampling")

    p_ve = sub.add_parser("verify", help="run the randomized cross-module invariant suite")
    p_ve.add_argument("--trials", type=int, default=100_000)
    p_ve.add_argument("--seed", type=int, default=0)

    return parser


def _report_to_dict(rep) -> dict:
    return {
        "indist": rep.indist,
        "deg_pol": rep.deg_pol,
        "alpha1_sq": rep.alpha1_sq,
        "identity_residual": rep.identity_residual,
        "inequality_margin": rep.inequality_margin,
        "best_circumstances": rep.best_circumstances,
        "degenerate": rep.degenerate,
    }


def cmd_analyze(args, tol: float) -> int:
    rho = _load_state(args, tol)
    scale = FieldScale(math.sqrt(args.c_sq))
    gamma = polarization_matrix(rho, scale)
    s = stokes_from_gamma(gamma)
    rep = duality_report(rho, scale, tol=tol)
    m = gamma.mat
    print(dumps({
        "report": _report_to_dict(rep),
        "gamma": [[[m.m11.real, m.m11.imag], [m.m12.real, m.m12.imag]],
                  [[m.m21.real, m.m21.imag], [m.m22.real, m.m22.imag]]],
        "stokes": {"s0": s.s0, "s1": s.s1, "s2": s.s2, "s3": s.s3},
    }))
    return 0


def cmd_sweep(args, tol: float) -> int:
    try:
        grid_a = _parse_grid(args.alpha1_sq)
        grid_i = _parse_grid(args.indist)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    reports = sweep(grid_a, grid_i)
    if args.format == "csv":
        sys.stdout.write(sweep_to_csv(reports))
    else:
        print(dumps([_report_to_dict(r) for r in reports]))
    return 0


def cmd_simulate(args, tol: float) -> int:
    rho = _load_state(args, tol)
    settings = None
    if args.setting:
        try:
            settings = tuple(AnalyzerSetting(*(float(x) for x in spec.split(",")))
                             for spec in args.setting)
        except (TypeError, ValueError) as exc:
            raise UsageError(f"bad --setting value: {exc}") from exc
        if len(settings) != 4:
            raise UsageError("exactly 4 --setting values required (H, V, D, R roles)")
    res = tomograph(rho, args.shots, args.seed,
                    settings=settings or DEFAULT_SETTINGS, analytic=args.analytic)
    p_exact = degree_of_polarization(polarization_matrix(rho))
    print(dumps({
        "stokes_hat": {"s0": res.stokes_hat.s0, "s1": res.stokes_hat.s1,
                       "s2": res.stokes_hat.s2, "s3": res.stokes_hat.s3},
        "deg_pol_hat": res.deg_pol_hat,
        "std_err": res.std_err,
        "deg_pol_exact": p_exact,
        "discrepancy_sigma": (res.deg_pol_hat - p_exact) / res.std_err,
        "shots_per_setting": args.shots,
        "seed": args.seed,
    }))
    return 0


def cmd_verify(args, tol: float) -> int:
    results = verify.run_all(trials=args.trials, seed=args.seed)
    failed = [r for r in results if not r.ok]
    for r in results:
        status = "PASS" if r.ok else "FAIL"
        print(f"{status}  {r.name}: max residual {r.max_residual:.3e} "
              f"(tol {r.tol:.1e}, {r.trials} trials)")
    if failed:
        first = failed[0]
        print(f"FAILED: {first.name} (seed {args.seed}, worst trial index {first.worst_trial})",
              file=sys.stderr)
        return 3
    print(f"all {len(results)} invariants passed ({args.trials} trials, seed {args.seed})")
    return 0


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    tol = TOL_VALID
    env_tol = os.environ.get("WPI_POL_TOL")
    if env_tol:
        try:
            tol = float(env_tol)
        except ValueError:
            print(f"wpipol: error: WPI_POL_TOL={env_tol!r} is not a number", file=sys.stderr)
            return 1
    handlers = {"analyze": cmd_analyze, "sweep": cmd_sweep,
                "simulate": cmd_simulate, "verify": cmd_verify}
    try:
        return handlers[args.command](args, tol)
    except UsageError as exc:
        print(f"wpipol: error: {exc}", file=sys.stderr)
        return 1
    except FileNotFoundError as exc:
        print(f"wpipol: error: {exc}", file=sys.stderr)
        return 1
    except StateValidationError as exc:
        print(f"{type(exc).__name__}: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"wpipol: error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
