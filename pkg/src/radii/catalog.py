"""Coefficient generators for the normalized Bessel, Struve and Lommel series.

Every generator returns a normalized :class:`~radii.series.PowerSeries`
(constant term 1) built from the ratio ``c[n+1] / c[n]``, so no Gamma
function is ever evaluated.

Family names
------------
``bessel_g``      z -> 2^nu Gamma(nu+1) z^(1-nu) J_nu(z)
``bessel_h``      z -> 2^nu Gamma(nu+1) z^(1-nu/2) J_nu(sqrt z)
``struve_u``      z -> sqrt(pi) 2^nu Gamma(nu+3/2) z^(-nu) H_nu(z)
``struve_w``      z -> sqrt(pi) 2^nu Gamma(nu+3/2) z^((1-nu)/2) H_nu(sqrt z)
``struve_combo``  alpha H_nu(z) + z H_nu'(z), normalized
``struve_deriv``  the ``alpha = 0`` case, i.e. z H_nu'(z); also stands for the
                  power-normalized Struve map whose starlikeness radius is
                  the first zero of H_nu'
``lommel_l``      z s'_{mu-1/2,1/2}(z), normalized
``lommel_f``      z -> (mu (mu+1) s_{mu-1/2,1/2}(z))^(1/(mu+1/2))

Note that ``bessel_h`` and the normalized ``struve_combo`` series are both
commonly written ``h_nu``; they are unrelated functions.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction

from .errors import DomainError, UnsupportedFamily
from .series import DEFAULT_ORDER, EVEN, GENERAL, PowerSeries, as_scalar

HALF = Fraction(1, 2)


class Family(str, enum.Enum):
    BESSEL_G = "bessel_g"
    BESSEL_H = "bessel_h"
    STRUVE_U = "struve_u"
    STRUVE_W = "struve_w"
    STRUVE_COMBO = "struve_combo"
    STRUVE_DERIV = "struve_deriv"
    LOMMEL_F = "lommel_f"
    LOMMEL_L = "lommel_l"

    def __str__(self) -> str:
        return self.value


class KernelKind(str, enum.Enum):
    FUNCTION_ITSELF = "function_itself"
    DERIVATIVE_ZERO_KERNEL = "derivative_zero_kernel"
    CONVEXITY_KERNEL = "convexity_kernel"


CONVEXITY_FAMILIES = frozenset({Family.BESSEL_G, Family.BESSEL_H, Family.STRUVE_U, Family.STRUVE_W})
DERIVATIVE_FAMILIES = frozenset({Family.STRUVE_COMBO, Family.STRUVE_DERIV, Family.LOMMEL_L})
STARLIKE_FAMILIES = frozenset({Family.STRUVE_DERIV, Family.LOMMEL_F})

# (parameter names, whether the storage variable is t = z^2)
_PARAM_NAMES = {
    Family.BESSEL_G: ("nu",),
    Family.BESSEL_H: ("nu",),
    Family.STRUVE_U: ("nu",),
    Family.STRUVE_W: ("nu",),
    Family.STRUVE_COMBO: ("alpha", "nu"),
    Family.STRUVE_DERIV: ("nu",),
    Family.LOMMEL_F: ("mu",),
    Family.LOMMEL_L: ("mu",),
}


def _is_nonpositive_integer(x) -> bool:
    return x <= 0 and x == int(x)


@dataclass(frozen=True)
class FamilyParams:
    """A family together with validated parameters.

    Values are converted with :func:`radii.series.as_scalar`, so they are
    exact fractions unless float mode is active.
    """

    family: Family
    nu: object = None
    alpha: object = None
    mu: object = None

    def __post_init__(self):
        family = Family(self.family)
        object.__setattr__(self, "family", family)
        needed = _PARAM_NAMES[family]
        for name in ("nu", "alpha", "mu"):
            value = getattr(self, name)
            if name in needed:
                if value is None:
                    raise DomainError(f"{family} requires {name}")
                object.__setattr__(self, name, as_scalar(value))
            elif value is not None:
                raise DomainError(f"{family} does not take {name}")
        self._validate()

    def _validate(self):
        f, nu, alpha, mu = self.family, self.nu, self.alpha, self.mu
        if f == Family.STRUVE_COMBO:
            if not alpha + nu > -1:
                raise DomainError("struve_combo requires alpha + nu > -1")
            if not abs(nu) < HALF:
                raise DomainError("struve_combo requires |nu| < 1/2")
        elif f == Family.STRUVE_DERIV:
            # closed interval: starlikeness holds at the endpoints; the zero
            # bounds themselves need |nu| < 1/2 and check that separately
            if not abs(nu) <= HALF:
                raise DomainError("struve_deriv requires |nu| <= 1/2")
        elif f == Family.LOMMEL_L:
            if not -1 < mu < 1:
                raise DomainError("lommel_l requires mu in (-1, 1)")
            if mu == 0:
                raise DomainError("lommel_l requires mu != 0")
            if mu == -HALF:
                raise DomainError("lommel_l requires mu != -1/2")
        elif f == Family.LOMMEL_F:
            if not -HALF < mu < 1:
                raise DomainError("lommel_f requires mu in (-1/2, 1)")
            if mu == 0:
                raise DomainError("lommel_f requires mu != 0")
        elif f in (Family.BESSEL_G, Family.BESSEL_H):
            if not nu > -1:
                raise DomainError(f"{f} requires nu > -1")
        elif f in (Family.STRUVE_U, Family.STRUVE_W):
            if not abs(nu) <= HALF:
                raise DomainError(f"{f} requires |nu| <= 1/2")

    def values(self) -> dict:
        return {name: getattr(self, name) for name in _PARAM_NAMES[self.family]}

    def label(self) -> str:
        return ", ".join(f"{k}={v}" for k, v in self.values().items())


def _ratio_series(first, ratio, order: int, parity: str) -> PowerSeries:
    coeffs = [first]
    for n in range(order):
        coeffs.append(coeffs[-1] * ratio(n))
    return PowerSeries(tuple(coeffs), parity)


def _one(x):
    return x ** 0


def bessel_j_series(nu, order: int = DEFAULT_ORDER, parity: str = EVEN) -> PowerSeries:
    """``2^nu Gamma(nu+1) z^-nu J_nu(z)``; ``c[n] = (-1)^n / (4^n n! (nu+1)_n)``."""
    nu = as_scalar(nu)
    if _is_nonpositive_integer(nu + 1):
        raise DomainError("nu must not be a negative integer")
    return _ratio_series(_one(nu), lambda n: -1 / (4 * (n + 1) * (nu + n + 1)), order, parity)


def struve_series(nu, order: int = DEFAULT_ORDER, parity: str = EVEN) -> PowerSeries:
    """``sqrt(pi) 2^nu Gamma(nu+3/2) z^(-nu-1) H_nu(z)``.

    ``c[n] = (-1)^n / (4^n (3/2)_n (nu+3/2)_n)``.
    """
    nu = as_scalar(nu)
    if _is_nonpositive_integer(nu + 3 * HALF):
        raise DomainError("-nu-3/2 must not be a nonnegative integer")
    return _ratio_series(_one(nu),
                         lambda n: -1 / (4 * (n + 3 * HALF) * (nu + n + 3 * HALF)),
                         order, parity)


def _with_linear_factor(base: PowerSeries, shift, scale) -> PowerSeries:
    # c[n] * (scale*n + shift) / shift
    return PowerSeries(tuple(c * (scale * n + shift) / shift for n, c in enumerate(base.coeffs)),
                       base.parity)


def struve_combo_series(alpha, nu, order: int = DEFAULT_ORDER) -> PowerSeries:
    """Normalized ``alpha H_nu + z H_nu'`` as an even series.

    ``c[n] = (-1)^n (2n+nu+alpha+1) / (4^n (nu+alpha+1) (3/2)_n (nu+3/2)_n)``.
    Its zeros in ``t = z^2`` are the squared zeros of the combination.
    """
    p = FamilyParams(Family.STRUVE_COMBO, nu=nu, alpha=alpha)
    return _with_linear_factor(struve_series(p.nu, order), p.nu + p.alpha + 1, 2)


def lommel_s_series(mu, order: int = DEFAULT_ORDER) -> PowerSeries:
    """``mu (mu+1) z^(-mu-1/2) s_{mu-1/2,1/2}(z)`` as an even series.

    ``c[n] = (-1)^n / (4^n ((mu+2)/2)_n ((mu+3)/2)_n)``.
    """
    mu = as_scalar(mu)
    if _is_nonpositive_integer((mu + 2) / 2) or _is_nonpositive_integer((mu + 3) / 2):
        raise DomainError("(-mu +- 1/2 - 3)/2 must not be a nonnegative integer")
    return _ratio_series(_one(mu),
                         lambda n: -1 / (4 * ((mu + 2) / 2 + n) * ((mu + 3) / 2 + n)),
                         order, EVEN)


def lommel_l_series(mu, order: int = DEFAULT_ORDER) -> PowerSeries:
    """Normalized ``z s'_{mu-1/2,1/2}(z)`` as an even series.

    ``c[n] = (-1)^n (2n+mu+1/2) / (4^n (mu+1/2) ((mu+2)/2)_n ((mu+3)/2)_n)``.
    """
    p = FamilyParams(Family.LOMMEL_L, mu=mu)
    return _with_linear_factor(lommel_s_series(p.mu, order), p.mu + HALF, 2)


def function_series(params: FamilyParams, order: int = DEFAULT_ORDER) -> PowerSeries:
    """Series ``B`` with ``f(z) = z * B(z^step)`` for the convexity families.

    For the starlike families this is the base series ``sigma`` with
    ``f(z) = z * sigma(z^2)^p``; see :func:`starlike_exponent`.
    """
    f, nu = params.family, params.nu
    if f == Family.BESSEL_G:
        return bessel_j_series(nu, order, EVEN)
    if f == Family.BESSEL_H:
        return bessel_j_series(nu, order, GENERAL)
    if f in (Family.STRUVE_U, Family.STRUVE_DERIV):
        return struve_series(nu, order, EVEN)
    if f == Family.STRUVE_W:
        return struve_series(nu, order, GENERAL)
    if f == Family.STRUVE_COMBO:
        return struve_combo_series(params.alpha, nu, order)
    if f == Family.LOMMEL_F:
        return lommel_s_series(params.mu, order)
    if f == Family.LOMMEL_L:
        return lommel_l_series(params.mu, order)
    raise UnsupportedFamily(str(f))


def starlike_exponent(params: FamilyParams):
    """Exponent ``p`` in ``f(z) = z * sigma(z^2)^p`` for the power-normalized maps."""
    if params.family == Family.STRUVE_DERIV:
        return 1 / (params.nu + 1)
    if params.family == Family.LOMMEL_F:
        return 1 / (params.mu + HALF)
    raise UnsupportedFamily(f"{params.family} is not a power-normalized starlike map")


def convexity_kernel_series(params: FamilyParams, order: int = DEFAULT_ORDER) -> PowerSeries:
    """The kernel ``(z f'(z))'`` whose smallest positive zero is the convexity radius.

    bessel_g  -> sum (-1)^n (2n+1)^2 z^2n / (4^n n! (nu+1)_n)         (even)
    bessel_h  -> sum (-1)^n (n+1)^2 z^n / (4^n n! (nu+1)_n)           (general)
    struve_u  -> sum (-1)^n (2n+1) z^2n / (4^n (1/2)_n (nu+3/2)_n)    (even)
    struve_w  -> sum (-1)^n (n+1)^2 z^n / (4^n (2n+1) (1/2)_n (nu+3/2)_n)  (general)
    """
    f = params.family
    if f not in CONVEXITY_FAMILIES:
        raise UnsupportedFamily(f"no convexity kernel for {f}")
    nu = params.nu
    if f == Family.BESSEL_G:
        base = _ratio_series(_one(nu), lambda n: -1 / (4 * (n + 1) * (nu + n + 1)), order, EVEN)
        weight = lambda n: (2 * n + 1) ** 2
    elif f == Family.BESSEL_H:
        base = _ratio_series(_one(nu), lambda n: -1 / (4 * (n + 1) * (nu + n + 1)), order, GENERAL)
        weight = lambda n: (n + 1) ** 2
    elif f == Family.STRUVE_U:
        base = _ratio_series(_one(nu), lambda n: -1 / (4 * (n + HALF) * (nu + n + 3 * HALF)),
                             order, EVEN)
        weight = lambda n: 2 * n + 1
    else:
        base = _ratio_series(_one(nu), lambda n: -1 / (4 * (n + HALF) * (nu + n + 3 * HALF)),
                             order, GENERAL)
        weight = lambda n: Fraction((n + 1) ** 2, 2 * n + 1)
    return PowerSeries(tuple(weight(n) * c for n, c in enumerate(base.coeffs)), base.parity)


def derivative_kernel_series(params: FamilyParams, order: int = DEFAULT_ORDER) -> PowerSeries:
    """Normalized series whose positive zeros (in ``t = z^2``) are the squared zeros
    of ``alpha H_nu + z H_nu'`` (struve_combo / struve_deriv) or of
    ``z s'_{mu-1/2,1/2}`` (lommel_l, and lommel_f through its derivative).
    """
    f = params.family
    if f == Family.STRUVE_COMBO:
        return struve_combo_series(params.alpha, params.nu, order)
    if f == Family.STRUVE_DERIV:
        return _with_linear_factor(struve_series(params.nu, order), params.nu + 1, 2)
    if f == Family.LOMMEL_L:
        return lommel_l_series(params.mu, order)
    if f == Family.LOMMEL_F:
        return _with_linear_factor(lommel_s_series(params.mu, order), params.mu + HALF, 2)
    raise UnsupportedFamily(f"no derivative kernel for {f}")


def kernel_series(params: FamilyParams, kind: KernelKind | str, order: int = DEFAULT_ORDER) -> PowerSeries:
    kind = KernelKind(kind)
    if kind == KernelKind.CONVEXITY_KERNEL:
        return convexity_kernel_series(params, order)
    if kind == KernelKind.DERIVATIVE_ZERO_KERNEL:
        return derivative_kernel_series(params, order)
    return function_series(params, order)
