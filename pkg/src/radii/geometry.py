"""Sample the starlikeness and convexity functionals on circles |z| = r.

Both functionals reduce to ratios of integer-power series, so no branch of
a fractional power is ever taken:

* power-normalized maps ``f(z) = z sigma(z^2)^p`` give
  ``z f'/f = 1 + p * 2 t sigma'(t) / sigma(t)`` with ``t = z^2``;
* maps ``f(z) = z B(z^k)`` give ``1 + z f''/f' = (z f')' / f'``.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .catalog import (CONVEXITY_FAMILIES, STARLIKE_FAMILIES, FamilyParams,
                      convexity_kernel_series, function_series, starlike_exponent)
from .errors import PoleTooClose, UnsupportedFamily
from .series import DEFAULT_ORDER, EVEN, PowerSeries

DEFAULT_ANGLES = 512
_EPS = 2.0 ** -53


@dataclass(frozen=True)
class RatioFunctional:
    """``offset + scale * numer(z) / denom(z)``."""

    numer: PowerSeries
    denom: PowerSeries
    offset: float = 0.0
    scale: float = 1.0

    def evaluate(self, z: np.ndarray) -> np.ndarray:
        num, _ = _horner(self.numer, z)
        den, den_err = _horner(self.denom, z)
        if np.any(np.abs(den) < 10 * den_err):
            k = int(np.argmin(np.abs(den) / np.maximum(den_err, 1e-300)))
            raise PoleTooClose(f"denominator too small at z={complex(z[k]):.6g}")
        return self.offset + self.scale * num / den


@dataclass(frozen=True)
class DiskScan:
    radius: float
    n_angles: int
    min_real_part: float
    argmin_angle: float
    # functional on the positive real axis (theta = 0)
    real_axis_value: float = math.nan


def _horner(s: PowerSeries, z: np.ndarray):
    """Complex Horner evaluation with an error bound (truncation + rounding)."""
    x = z * z if s.parity == EVEN else z
    c = np.asarray(s.float_coeffs, dtype=float)
    acc = np.zeros_like(x, dtype=complex)
    for cn in c[::-1]:
        acc = acc * x + cn
    if s.z_power:
        acc = acc * z ** s.z_power
    rho = float(np.max(np.abs(x))) if x.size else 0.0
    mags = np.abs(c) * rho ** np.arange(len(c))
    err = (2 * len(c) + 3) * _EPS * float(mags.sum())
    if not s.exact and len(c) > 1 and mags[-2] > 0:
        q = mags[-1] / mags[-2]
        err += mags[-1] * q / (1 - q) if q < 1 else math.inf
    if s.z_power:
        err *= float(np.max(np.abs(z))) ** s.z_power
    return acc, err


def _weighted(s: PowerSeries, weight) -> PowerSeries:
    return PowerSeries(tuple(weight(n) * c for n, c in enumerate(s.coeffs)), s.parity, s.z_power, s.exact)


def star_functional(params: FamilyParams, order: int = DEFAULT_ORDER) -> RatioFunctional:
    """``z f'/f`` for the power-normalized Struve (struve_deriv) and Lommel maps."""
    if params.family not in STARLIKE_FAMILIES:
        raise UnsupportedFamily(f"no starlikeness functional for {params.family}")
    sigma = function_series(params, order)
    return power_map_functional(sigma, starlike_exponent(params))


def power_map_functional(sigma: PowerSeries, exponent) -> RatioFunctional:
    """``z f'/f`` for ``f(z) = z sigma(z^2)^exponent``."""
    numer = _weighted(sigma, lambda n: 2 * n)
    return RatioFunctional(numer, sigma, 1.0, float(exponent))


def convex_functional(params: FamilyParams, order: int = DEFAULT_ORDER) -> RatioFunctional:
    """``1 + z f''/f'`` for bessel_g, bessel_h, struve_u and struve_w."""
    if params.family not in CONVEXITY_FAMILIES:
        raise UnsupportedFamily(f"no convexity functional for {params.family}")
    return linear_map_functional(function_series(params, order),
                                 kernel=convexity_kernel_series(params, order))


def linear_map_functional(base: PowerSeries, kernel: PowerSeries | None = None) -> RatioFunctional:
    """``(z f')'/f'`` for ``f(z) = z base(z^k)``, ``k = 2`` for even series."""
    k = base.step
    fprime = _weighted(base, lambda n: k * n + 1)
    if kernel is None:
        kernel = _weighted(base, lambda n: (k * n + 1) ** 2)
    return RatioFunctional(kernel, fprime)


IDENTITY = RatioFunctional(PowerSeries.polynomial((1,)), PowerSeries.polynomial((1,)))


def scan_circle(functional: RatioFunctional, r: float, n_angles: int = DEFAULT_ANGLES) -> DiskScan:
    """Sample ``Re(functional)`` at ``n_angles`` equally spaced points of ``|z| = r``."""
    if n_angles < 64:
        raise ValueError("n_angles must be at least 64")
    theta = 2 * np.pi * np.arange(n_angles) / n_angles
    z = r * np.exp(1j * theta)
    re = np.real(functional.evaluate(z))
    k = int(np.argmin(re))
    return DiskScan(float(r), n_angles, float(re[k]), float(theta[k]), float(re[0]))


def min_re_star_functional(target, r: float, n_angles: int = DEFAULT_ANGLES) -> DiskScan:
    """Minimum of ``Re(z f'/f)`` over ``n_angles`` points of ``|z| = r``.

    ``target`` is a :class:`FamilyParams` of a power-normalized family or a
    ready-made :class:`RatioFunctional`.
    """
    functional = target if isinstance(target, RatioFunctional) else star_functional(target)
    return scan_circle(functional, r, n_angles)


def min_re_convex_functional(target, r: float, n_angles: int = DEFAULT_ANGLES) -> DiskScan:
    """Minimum of ``Re(1 + z f''/f')`` over ``n_angles`` points of ``|z| = r``."""
    functional = target if isinstance(target, RatioFunctional) else convex_functional(target)
    return scan_circle(functional, r, n_angles)


def functional_for(params: FamilyParams) -> RatioFunctional:
    if params.family in STARLIKE_FAMILIES:
        return star_functional(params)
    return convex_functional(params)


def real_axis_minimum_property(target, r: float, n_angles: int = DEFAULT_ANGLES,
                               rtol: float = 1e-9) -> bool:
    """True when the sampled minimum over ``|z| = r`` is attained on the positive real axis."""
    functional = target if isinstance(target, RatioFunctional) else functional_for(target)
    try:
        scan = scan_circle(functional, r, n_angles)
    except PoleTooClose:
        return False
    return scan.real_axis_value - scan.min_real_part <= rtol * (1 + abs(scan.real_axis_value))
