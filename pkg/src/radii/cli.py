"""Command-line entry point: ``radii {bounds,verify,eval,zero,radius}``.

Exit codes: 0 success, 1 verification failure, 2 usage or domain error.
"""
from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from .catalog import CONVEXITY_FAMILIES, Family, FamilyParams, KernelKind, kernel_series
from .closed_forms import THEOREMS, TheoremId
from .errors import DomainError, InsufficientOrder, RadiiError, UnsupportedFamily
from .rayleigh import DEFAULT_K
from .report import (ALL_CHECKS, DEFAULT_GRIDS, ReportRow, SweepConfig, evaluate_point,
                     parse_range, render, run_sweep)
from .series import eval_series
from .zeros import DEFAULT_TOL, radius_of_convexity, radius_of_starlikeness, smallest_zero

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2

KERNEL_ALIASES = {
    "function": KernelKind.FUNCTION_ITSELF,
    "derivative": KernelKind.DERIVATIVE_ZERO_KERNEL,
    "convexity": KernelKind.CONVEXITY_KERNEL,
}


class UsageError(Exception):
    pass


def _number(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not a number: {text!r}")


def _param_values(args) -> dict:
    return {name: getattr(args, name) for name in ("nu", "alpha", "mu")
            if getattr(args, name) is not None}


def _emit(text: str, out: str | None) -> None:
    if out:
        with open(out, "w", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _print_values(record: dict, fmt: str, out: str | None) -> None:
    if fmt == "json":
        _emit(json.dumps(record, indent=2, sort_keys=True) + "\n", out)
    else:
        keys = list(record)
        lines = [",".join(keys), ",".join(str(record[k]) for k in keys)]
        _emit("\n".join(lines) + "\n", out)


def _g(x) -> str:
    return f"{float(x):.17g}"


# --- subcommands ---------------------------------------------------------

def cmd_bounds(theorem, params: FamilyParams, K: int = DEFAULT_K,
               tol: float = DEFAULT_TOL) -> ReportRow:
    """Ladder, displayed closed forms and certified zero at one parameter point."""
    return evaluate_point(theorem, params, K, tol)


def _run_bounds(args) -> int:
    theorem = TheoremId(args.theorem)
    params = FamilyParams(THEOREMS[theorem].family, **_param_values(args))
    row = cmd_bounds(theorem, params, args.order, args.tol)
    _emit(render([row], args.format), args.out)
    return EXIT_OK if row.passed else EXIT_FAIL


def _grids_from_args(theorems, grid_args) -> dict:
    grids = {}
    for theorem in theorems:
        names = list(DEFAULT_GRIDS[theorem])
        spec = {}
        for text in grid_args or ():
            if "=" in text:
                name, rng = text.split("=", 1)
            else:
                # a bare range applies to the theorem's own order parameter
                name, rng = names[-1], text
            if name not in names:
                continue
            parse_range(rng)
            spec[name] = rng
        if spec:
            grids[theorem] = {**DEFAULT_GRIDS[theorem], **spec}
    return grids


def cmd_verify(config: SweepConfig, fmt: str = "csv", out: str | None = None,
               stream=None) -> int:
    """Run the sweep, write the report and return the exit code."""
    stream = stream or sys.stderr
    rows = run_sweep(config)
    _emit(render(rows, fmt), out)
    if not rows:
        print("warning: 0 rows", file=stream)
        return EXIT_OK
    invalid = [r for r in rows if not r.valid]
    for r in invalid:
        print(f"skipped {r.label()}: {r.reason}", file=stream)
    failed = [r for r in rows if r.valid and not r.passed]
    checked = len(rows) - len(invalid)
    if failed:
        first = failed[0]
        print(f"FAIL {first.label()}: {', '.join(first.failed)}", file=stream)
        print(f"{len(failed)} of {checked} rows failed", file=stream)
        return EXIT_FAIL
    print(f"{checked} rows passed", file=stream)
    return EXIT_OK


def _run_verify(args) -> int:
    theorems = tuple(TheoremId(t) for t in args.theorem) if args.theorem else tuple(TheoremId)
    checks = tuple(c.strip() for c in args.checks.split(",")) if args.checks else ALL_CHECKS
    unknown = set(checks) - set(ALL_CHECKS)
    if unknown:
        raise UsageError(f"unknown checks: {', '.join(sorted(unknown))}")
    try:
        grids = _grids_from_args(theorems, args.grid)
    except ValueError as exc:
        raise UsageError(str(exc))
    config = SweepConfig(theorems, grids, args.order, args.tol, checks)
    return cmd_verify(config, args.format, args.out)


def cmd_eval(params: FamilyParams, z, kernel: str = "function") -> dict:
    s = kernel_series(params, KERNEL_ALIASES[kernel])
    res = eval_series(s, z)
    return {"family": str(params.family), "params": params.label(), "kernel": kernel,
            "z": str(z), "value": _g(res.value), "error_bound": _g(res.error_bound),
            "terms": res.terms_used}


def _radius_record(res) -> dict:
    return {"kind": res.kind.value, "kernel": res.kernel, "value": _g(res.value),
            "bracket_lo": _g(res.bracket[0]), "bracket_hi": _g(res.bracket[1]),
            "scan_step": _g(res.scan_step)}


def cmd_zero(params: FamilyParams, tol: float = DEFAULT_TOL) -> dict:
    return _radius_record(smallest_zero(params, tol))


def cmd_radius(params: FamilyParams, tol: float = DEFAULT_TOL) -> dict:
    if params.family in CONVEXITY_FAMILIES:
        return _radius_record(radius_of_convexity(params, tol))
    return _radius_record(radius_of_starlikeness(params, tol))


def _family_params(args) -> FamilyParams:
    return FamilyParams(Family(args.family), **_param_values(args))


def _run_eval(args) -> int:
    _print_values(cmd_eval(_family_params(args), args.z, args.kernel), args.format, args.out)
    return EXIT_OK


def _run_zero(args) -> int:
    _print_values(cmd_zero(_family_params(args), args.tol), args.format, args.out)
    return EXIT_OK


def _run_radius(args) -> int:
    _print_values(cmd_radius(_family_params(args), args.tol), args.format, args.out)
    return EXIT_OK


# --- parser --------------------------------------------------------------

def _add_params(p: argparse.ArgumentParser) -> None:
    p.add_argument("--nu", type=_number)
    p.add_argument("--alpha", type=_number)
    p.add_argument("--mu", type=_number)


def _add_output(p: argparse.ArgumentParser) -> None:
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.add_argument("--out", help="write to this file instead of stdout")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="radii",
        description="Euler-Rayleigh bounds and geometric radii of normalized Bessel, "
                    "Struve and Lommel functions. Set RADII_PRECISION=float for float "
                    "arithmetic (default: exact rationals).")
    sub = parser.add_subparsers(dest="command", required=True)
    theorem_ids = [t.value for t in TheoremId]
    families = [f.value for f in Family]

    p = sub.add_parser("bounds", help="bound ladder, closed forms and zero at one point")
    p.add_argument("--theorem", required=True, choices=theorem_ids)
    _add_params(p)
    p.add_argument("--order", type=int, default=DEFAULT_K, help="ladder depth K")
    p.add_argument("--tol", type=float, default=DEFAULT_TOL)
    _add_output(p)
    p.set_defaults(run=_run_bounds)

    p = sub.add_parser("verify", help="sweep parameter grids and check every inequality")
    p.add_argument("--theorem", action="append", choices=theorem_ids,
                   help="repeatable; default is every theorem")
    p.add_argument("--grid", action="append",
                   help="start:stop:step, optionally prefixed by name= (repeatable)")
    p.add_argument("--order", type=int, default=DEFAULT_K, help="ladder depth K")
    p.add_argument("--tol", type=float, default=1e-10)
    p.add_argument("--checks", help=f"comma list out of {','.join(ALL_CHECKS)}")
    _add_output(p)
    p.set_defaults(run=_run_verify)

    p = sub.add_parser("eval", help="evaluate a normalized series at a real point")
    p.add_argument("--family", required=True, choices=families)
    _add_params(p)
    p.add_argument("--z", type=_number, required=True)
    p.add_argument("--kernel", choices=sorted(KERNEL_ALIASES), default="function")
    _add_output(p)
    p.set_defaults(run=_run_eval)

    for name, helptext, run in (("zero", "smallest positive zero of the defining kernel", _run_zero),
                                ("radius", "radius of convexity or starlikeness", _run_radius)):
        p = sub.add_parser(name, help=helptext)
        p.add_argument("--family", required=True, choices=families)
        _add_params(p)
        p.add_argument("--tol", type=float, default=DEFAULT_TOL)
        _add_output(p)
        p.set_defaults(run=run)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "order", 1) < 1:
        parser.error("--order must be at least 1")
    try:
        return args.run(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
    except (DomainError, UnsupportedFamily, InsufficientOrder) as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
    except RadiiError as exc:
        # a well-posed request the numerics could not certify
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_FAIL
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
    return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
