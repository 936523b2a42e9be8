"""Parameter sweeps that cross-check the generic engine against the theorems.

One :class:`ReportRow` is produced per grid point.  Its ladder lines pair the
generic Euler-Rayleigh bound of each order with the closed form displayed
in the theorem (when one exists), next to the certified zero.
"""
from __future__ import annotations

import csv
import io
import itertools
import json
import math
from dataclasses import dataclass, field
from fractions import Fraction

from .catalog import (Family, FamilyParams, KernelKind, function_series, kernel_series,
                      starlike_exponent)
from .closed_forms import (THEOREMS, TheoremId, check_hypothesis, proof_sums,
                           starlike_maclaurin, theorem_bounds)
from .errors import RadiiError
from .geometry import functional_for, scan_circle
from .rayleigh import DEFAULT_K, Surd, bound_ladder, power_sums, variable_map
from .series import series_power
from .zeros import DEFAULT_TOL, RadiusKind, smallest_positive_zero

ALL_CHECKS = ("oracle", "closed_form", "sandwich", "monotone", "sharper", "geometry", "maclaurin")
GEOMETRY_EPS = 0.05
GEOMETRY_ANGLES = 512
_EPS = 2.0 ** -53

# 20 points per bounded theorem, all inside the hypothesis domains
DEFAULT_GRIDS = {
    TheoremId.T1: {"alpha": ("-1/2", "5/2", "1"), "nu": ("-2/5", "2/5", "1/5")},
    TheoremId.T2: {"nu": ("-9/20", "9/20", "1/10")},
    TheoremId.T3: {"mu": ("-19/40", "19/20", "3/40")},
    TheoremId.T4: {"nu": ("-1/2", "1/2", "1/9")},
    TheoremId.T5: {"mu": ("-19/40", "19/20", "3/40")},
    TheoremId.T6: {"nu": ("-9/10", "24/5", "3/10")},
    TheoremId.T7: {"nu": ("-9/10", "24/5", "3/10")},
    TheoremId.T8: {"nu": ("-1/2", "1/2", "1/19")},
    TheoremId.T9: {"nu": ("-1/2", "1/2", "1/19")},
}

CSV_COLUMNS = ("theorem", "alpha", "nu", "mu", "quantity", "k", "lower_generic", "lower_closed_form",
               "upper_closed_form", "upper_generic", "zero", "pass", "failed")


def parse_range(text: str) -> list:
    """``"a:b:step"`` -> exact grid ``a, a+step, ... <= b``; a single value is a one-point grid."""
    parts = text.split(":")
    if len(parts) == 1:
        return [Fraction(parts[0])]
    if len(parts) != 3:
        raise ValueError(f"grid must look like start:stop:step, got {text!r}")
    start, stop, step = (Fraction(p) for p in parts)
    if step <= 0:
        raise ValueError("grid step must be positive")
    out = []
    x = start
    while x <= stop:
        out.append(x)
        x += step
    return out


@dataclass
class SweepConfig:
    theorems: tuple = tuple(TheoremId)
    # theorem -> {param: "a:b:step" or (a, b, step)}; missing theorems use DEFAULT_GRIDS
    grids: dict = field(default_factory=dict)
    K: int = DEFAULT_K
    tol: float = 1e-10
    checks: tuple = ALL_CHECKS

    def grid_points(self, theorem: TheoremId) -> list:
        spec = self.grids.get(theorem, DEFAULT_GRIDS[theorem])
        axes = []
        names = []
        for name, rng in spec.items():
            names.append(name)
            axes.append(parse_range(rng if isinstance(rng, str) else ":".join(map(str, rng))))
        return [dict(zip(names, values)) for values in itertools.product(*axes)]


@dataclass
class LadderLine:
    k: int
    lower_generic: object
    upper_generic: object
    lower_closed_form: object = None
    upper_closed_form: object = None
    failed: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failed


@dataclass
class ReportRow:
    theorem: TheoremId
    params: dict
    quantity: str = ""
    zero: float | None = None
    bracket: tuple = ()
    scan_step: float = 0.0
    ladder: list = field(default_factory=list)
    checks: dict = field(default_factory=dict)
    status: str = "ok"
    reason: str = ""

    @property
    def valid(self) -> bool:
        return self.status == "ok"

    @property
    def failed(self) -> list:
        out = [name for name, ok in self.checks.items() if not ok]
        for line in self.ladder:
            out.extend(f"k={line.k}:{name}" for name in line.failed)
        return out

    @property
    def passed(self) -> bool:
        return self.valid and not self.failed

    def label(self) -> str:
        vals = ", ".join(f"{k}={v}" for k, v in self.params.items())
        return f"{self.theorem} ({vals})"


def _agree(a, b) -> bool:
    if isinstance(a, Surd) or isinstance(b, Surd):
        a, b = Surd._coerce(a), Surd._coerce(b)
        if a.is_exact and b.is_exact:
            return a == b
    elif isinstance(a, (int, Fraction)) and isinstance(b, (int, Fraction)):
        return a == b
    return math.isclose(float(a), float(b), rel_tol=1e-10, abs_tol=0.0)


def _in_z(bound, power: int) -> float:
    return float(bound) ** (1.0 / power)


def evaluate_point(theorem, params: FamilyParams, K: int = DEFAULT_K, tol: float = DEFAULT_TOL,
                   checks=ALL_CHECKS) -> ReportRow:
    """Run every enabled check at one parameter point."""
    theorem = check_hypothesis(theorem, params)
    info = THEOREMS[theorem]
    row = ReportRow(theorem, params.values(), quantity="zero^2" if info.target_power == 2 else "radius")
    s = kernel_series(params, info.kernel)
    if info.kernel == KernelKind.CONVEXITY_KERNEL:
        kind = RadiusKind.CONVEXITY
    elif theorem in (TheoremId.T4, TheoremId.T5):
        kind = RadiusKind.STARLIKENESS
    else:
        kind = RadiusKind.SMALLEST_ZERO
    zero = smallest_positive_zero(s, tol=tol, kind=kind, kernel=info.target)
    row.zero, row.bracket, row.scan_step = zero.value, zero.bracket, zero.scan_step
    power = info.target_power
    margin = 10 * tol

    if info.has_bounds:
        sums = power_sums(s, K + 1)
        ladder = bound_ladder(sums)
        if power == 1:
            ladder = variable_map(ladder, s.parity)
        closed = theorem_bounds(theorem, params)
        if "oracle" in checks:
            stated = proof_sums(theorem, params)
            row.checks["oracle"] = all(_agree(a, b) for a, b in zip(stated.sums, sums.sums))
        for k in range(1, len(ladder) + 1):
            lo, hi = ladder[k]
            line = LadderLine(k, lo, hi,
                              closed.lowers[k - 1] if k <= len(closed.lowers) else None,
                              closed.uppers[k - 1] if k <= len(closed.uppers) else None)
            if "closed_form" in checks:
                if line.lower_closed_form is not None and not _agree(line.lower_closed_form, lo):
                    line.failed.append("closed_form_lower")
                if line.upper_closed_form is not None and not _agree(line.upper_closed_form, hi):
                    line.failed.append("closed_form_upper")
            if "sandwich" in checks:
                if line.lower_closed_form is not None or line.upper_closed_form is not None:
                    # displayed orders: strict, with a margin of 10 tol
                    if not all(zero.value - _in_z(b, power) > margin
                               for b in (lo, line.lower_closed_form) if b is not None):
                        line.failed.append("sandwich_lower")
                    if not all(_in_z(b, power) - zero.value > margin
                               for b in (hi, line.upper_closed_form) if b is not None):
                        line.failed.append("sandwich_upper")
                else:
                    # higher orders can close in below double precision; they
                    # only must not contradict the certified bracket
                    slack = 8 * _EPS * zero.bracket[1]
                    if _in_z(lo, power) > zero.bracket[1] + slack:
                        line.failed.append("sandwich_lower")
                    if _in_z(hi, power) < zero.bracket[0] - slack:
                        line.failed.append("sandwich_upper")
            row.ladder.append(line)
        if "monotone" in checks:
            row.checks["monotone"] = ladder.is_monotone() and ladder.is_ordered()
        if "sharper" in checks and K > len(closed.lowers):
            lo_k, hi_k = ladder[K]
            row.checks["sharper"] = lo_k > max(closed.lowers) and hi_k < min(closed.uppers)

    if "geometry" in checks and theorem not in (TheoremId.T1, TheoremId.T2, TheoremId.T3):
        functional = functional_for(params)
        inside = scan_circle(functional, (1 - GEOMETRY_EPS) * zero.value, GEOMETRY_ANGLES)
        outside = scan_circle(functional, (1 + GEOMETRY_EPS) * zero.value, GEOMETRY_ANGLES)
        row.checks["geometry"] = inside.min_real_part > 0 > outside.min_real_part

    if "maclaurin" in checks and theorem in (TheoremId.T4, TheoremId.T5):
        expanded = series_power(function_series(params, 4), starlike_exponent(params), 2)
        stated = starlike_maclaurin(theorem, params)
        row.checks["maclaurin"] = (_agree(expanded[1], stated[3]) and _agree(expanded[2], stated[5]))
    return row


def invalid_row(theorem: TheoremId, values: dict, reason: str) -> ReportRow:
    return ReportRow(theorem, values, status="invalid", reason=reason)


def run_sweep(config: SweepConfig) -> list:
    """Evaluate every grid point of every theorem, in grid order."""
    rows = []
    for theorem in config.theorems:
        theorem = TheoremId(theorem)
        family = THEOREMS[theorem].family
        for values in config.grid_points(theorem):
            try:
                params = FamilyParams(Family(family), **values)
                rows.append(evaluate_point(theorem, params, config.K, config.tol, config.checks))
            except RadiiError as exc:
                rows.append(invalid_row(theorem, values, f"{type(exc).__name__}: {exc}"))
    return rows


# --- rendering -----------------------------------------------------------

def _num(x) -> str:
    if x is None:
        return ""
    return f"{float(x):.17g}"


def _param(x) -> str:
    return "" if x is None else str(x)


def _target(row: ReportRow, x):
    if x is None:
        return None
    return float(x) ** (2 if row.quantity == "zero^2" else 1)


def csv_records(rows: list) -> list:
    records = []
    for row in rows:
        base = {"theorem": str(row.theorem), "alpha": _param(row.params.get("alpha")),
                "nu": _param(row.params.get("nu")), "mu": _param(row.params.get("mu")),
                "quantity": row.quantity, "zero": _num(_target(row, row.zero))}
        point_failures = [name for name, ok in row.checks.items() if not ok]
        if not row.valid:
            records.append({**base, "k": "", "lower_generic": "", "lower_closed_form": "",
                            "upper_closed_form": "", "upper_generic": "", "pass": "invalid",
                            "failed": row.reason})
            continue
        lines = row.ladder or [None]
        for line in lines:
            failed = point_failures + (line.failed if line else [])
            records.append({
                **base,
                "k": "" if line is None else str(line.k),
                "lower_generic": "" if line is None else _num(line.lower_generic),
                "lower_closed_form": "" if line is None else _num(line.lower_closed_form),
                "upper_closed_form": "" if line is None else _num(line.upper_closed_form),
                "upper_generic": "" if line is None else _num(line.upper_generic),
                "pass": "true" if not failed else "false",
                "failed": ";".join(failed),
            })
    return records


def to_csv(rows: list) -> str:
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=CSV_COLUMNS, lineterminator="\n")
    writer.writeheader()
    writer.writerows(csv_records(rows))
    return buf.getvalue()


def to_json(rows: list) -> str:
    out = []
    for row in rows:
        out.append({
            "theorem": str(row.theorem),
            "params": {k: str(v) for k, v in row.params.items()},
            "status": row.status,
            "reason": row.reason,
            "quantity": row.quantity,
            "zero": None if row.zero is None else float(f"{row.zero:.17g}"),
            "bracket": [float(f"{b:.17g}") for b in row.bracket],
            "scan_step": row.scan_step,
            "checks": row.checks,
            "ladder": [{
                "k": line.k,
                "lower_generic": _num(line.lower_generic),
                "lower_closed_form": _num(line.lower_closed_form) or None,
                "upper_closed_form": _num(line.upper_closed_form) or None,
                "upper_generic": _num(line.upper_generic),
                "pass": line.passed,
                "failed": line.failed,
            } for line in row.ladder],
            "pass": row.passed,
        })
    return json.dumps(out, indent=2, sort_keys=True) + "\n"


def render(rows: list, fmt: str = "csv") -> str:
    if fmt == "csv":
        return to_csv(rows)
    if fmt == "json":
        return to_json(rows)
    raise ValueError(f"unknown format {fmt!r}")
