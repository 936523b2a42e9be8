"""Certified smallest positive zeros and the radii built from them."""
from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction

from .catalog import (CONVEXITY_FAMILIES, STARLIKE_FAMILIES, Family, FamilyParams,
                      convexity_kernel_series, derivative_kernel_series, function_series)
from .errors import NoZeroFound, PrecisionExhausted, UnsupportedFamily
from .rayleigh import bound_ladder, power_sums, variable_map
from .series import DEFAULT_ORDER, PowerSeries, eval_series

DEFAULT_TOL = 1e-12
SCAN_STEPS = 64
# the scan runs this far past the first-order upper bound
SCAN_INFLATION = 1.1


class RadiusKind(str, enum.Enum):
    STARLIKENESS = "starlikeness"
    CONVEXITY = "convexity"
    SMALLEST_ZERO = "smallest_zero"


@dataclass(frozen=True)
class RadiusResult:
    value: float
    bracket: tuple
    kind: RadiusKind
    kernel: str
    scan_step: float = 0.0

    @property
    def width(self) -> float:
        return self.bracket[1] - self.bracket[0]


def first_upper_bound(s: PowerSeries) -> float:
    """``S_1 / S_2`` mapped back to ``z``: the smallest zero lies below it."""
    ladder = variable_map(bound_ladder(power_sums(s, 2)), s.parity)
    return float(ladder[1][1])


def _sign(s: PowerSeries, z: float) -> int:
    sg = eval_series(s, z).certified_sign()
    if sg == 0 and all(isinstance(c, (int, Fraction)) for c in s.coeffs):
        # float rounding swamps the value this close to a zero; redo it exactly
        sg = eval_series(s, Fraction(z)).certified_sign()
    return sg


def smallest_positive_zero(s: PowerSeries, scan_step: float | None = None,
                           tol: float = DEFAULT_TOL, kind: RadiusKind = RadiusKind.SMALLEST_ZERO,
                           kernel: str = "") -> RadiusResult:
    """Leftmost certified sign change of ``s`` on the positive axis, bisected to ``tol``.

    The scan from 0 stops at 1.1 times the first-order Euler-Rayleigh upper
    bound.  A scan point only counts when ``|value|`` exceeds the combined
    truncation and rounding bound, so recorded signs are never guesses.
    """
    if not s.constant_term_normalized:
        raise ValueError("smallest_positive_zero needs a normalized series")
    limit = SCAN_INFLATION * first_upper_bound(s)
    step = scan_step or limit / SCAN_STEPS

    lo, hi = 0.0, None
    prev = 1
    z = 0.0
    while z < limit:
        z = min(z + step, limit)
        sg = _sign(s, z)
        if sg == 0:
            raise PrecisionExhausted(f"sign undecidable at scan point z={z!r}")
        if sg != prev:
            hi = z
            break
        lo = z
    if hi is None:
        raise NoZeroFound(f"no sign change on (0, {limit:g}]")

    sign_lo = prev
    while hi - lo > tol:
        mid = 0.5 * (lo + hi)
        if mid in (lo, hi):
            break
        sg = _sign(s, mid)
        if sg == 0:
            # the midpoint sits inside the error band around the zero
            a, b = mid - tol / 4, mid + tol / 4
            sa, sb = _sign(s, a), _sign(s, b)
            if sa == sign_lo and sb == -sign_lo:
                lo, hi = a, b
                break
            raise PrecisionExhausted(f"cannot certify the sign near z={mid!r}")
        if sg == sign_lo:
            lo = mid
        else:
            hi = mid
    return RadiusResult(0.5 * (lo + hi), (lo, hi), RadiusKind(kind), kernel, step)


def radius_of_convexity(params: FamilyParams, tol: float = DEFAULT_TOL,
                        order: int = DEFAULT_ORDER) -> RadiusResult:
    """Smallest positive zero of ``(z f'(z))'`` for bessel_g, bessel_h, struve_u, struve_w."""
    if params.family not in CONVEXITY_FAMILIES:
        raise UnsupportedFamily(f"no convexity radius for {params.family}")
    s = convexity_kernel_series(params, order)
    return smallest_positive_zero(s, tol=tol, kind=RadiusKind.CONVEXITY,
                                  kernel=f"(z f'(z))' for {params.family}({params.label()})")


def radius_of_starlikeness(params: FamilyParams, tol: float = DEFAULT_TOL,
                           order: int = DEFAULT_ORDER) -> RadiusResult:
    """First zero of H_nu' (struve_deriv) or of s'_{mu-1/2,1/2} (lommel_f)."""
    if params.family not in STARLIKE_FAMILIES:
        raise UnsupportedFamily(f"no starlikeness radius for {params.family}")
    s = derivative_kernel_series(params, order)
    what = "H_nu'" if params.family == Family.STRUVE_DERIV else "s'_{mu-1/2,1/2}"
    return smallest_positive_zero(s, tol=tol, kind=RadiusKind.STARLIKENESS,
                                  kernel=f"{what} ({params.label()})")


def smallest_zero(params: FamilyParams, tol: float = DEFAULT_TOL,
                  order: int = DEFAULT_ORDER) -> RadiusResult:
    """Smallest positive zero of the family's defining kernel.

    The derivative families use their derivative kernel, the convexity
    families their convexity kernel, and ``lommel_f`` its derivative.
    """
    f = params.family
    if f in CONVEXITY_FAMILIES:
        s = convexity_kernel_series(params, order)
    elif f in (Family.STRUVE_COMBO, Family.STRUVE_DERIV, Family.LOMMEL_L, Family.LOMMEL_F):
        s = derivative_kernel_series(params, order)
    else:
        s = function_series(params, order)
    return smallest_positive_zero(s, tol=tol, kernel=f"{f}({params.label()})")
