"""Truncated Maclaurin series with an alternating-remainder error bound.

Coefficients are stored exactly (``fractions.Fraction``) whenever the
parameters that generate them are rational, and as floats in float mode.
The arithmetic below is written against the number protocol only, so
``mpmath.mpf`` coefficients work as well.

Parity convention
-----------------
``EVEN`` series are stored in the variable ``t = z**2``: the value at ``z`` is
``z**z_power * sum(c[n] * t**n)``.  ``GENERAL`` series use ``z`` directly:
``z**z_power * sum(c[n] * z**n)``.  The extra ``z_power`` factor lets the odd
derivative of an even series be represented as ``z * (even series)``.
"""
from __future__ import annotations

import math
import os
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from numbers import Rational
from typing import Sequence

from .errors import NonConvergent

EVEN = "even"
GENERAL = "general"

DEFAULT_ORDER = 60

# terms below this fraction of the largest term are dropped from the sum
_NEGLIGIBLE = 2.0 ** -70
_FLOAT_EPS = 2.0 ** -53


def precision_mode() -> str:
    """Arithmetic mode selected by ``RADII_PRECISION`` (``rational`` or ``float``)."""
    mode = os.environ.get("RADII_PRECISION", "rational").strip().lower()
    if mode not in ("rational", "float"):
        raise ValueError(f"RADII_PRECISION must be 'rational' or 'float', got {mode!r}")
    return mode


def as_scalar(x, mode: str | None = None):
    """Convert a user-supplied parameter to the working number type.

    In rational mode floats are read through their shortest decimal repr, so
    ``0.3`` becomes ``3/10`` rather than the nearest binary fraction.
    """
    mode = mode or precision_mode()
    if mode == "float":
        return float(x)
    if isinstance(x, bool):
        raise TypeError("booleans are not parameters")
    if isinstance(x, Rational):
        return Fraction(x)
    if isinstance(x, float):
        return Fraction(repr(x))
    if isinstance(x, str):
        return Fraction(x)
    # mpmath.mpf and friends pass through untouched
    return x


def pochhammer(x, n: int):
    """Rising factorial ``x (x+1) ... (x+n-1)``; 1 for ``n == 0``."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    result = 1 if isinstance(x, (int, Fraction)) else x ** 0
    for i in range(n):
        result *= x + i
    return result


@dataclass(frozen=True)
class PowerSeries:
    coeffs: tuple
    parity: str = GENERAL
    z_power: int = 0
    # True when the stored coefficients are the whole series (a polynomial)
    exact: bool = False

    def __post_init__(self):
        object.__setattr__(self, "coeffs", tuple(self.coeffs))
        if self.parity not in (EVEN, GENERAL):
            raise ValueError(f"unknown parity {self.parity!r}")
        if not self.coeffs:
            raise ValueError("a series needs at least one coefficient")

    @classmethod
    def polynomial(cls, coeffs: Sequence, parity: str = GENERAL) -> "PowerSeries":
        return cls(tuple(coeffs), parity=parity, exact=True)

    @property
    def truncation_order(self) -> int:
        return len(self.coeffs) - 1

    @property
    def constant_term_normalized(self) -> bool:
        return self.z_power == 0 and self.coeffs[0] == 1

    @property
    def step(self) -> int:
        """Exponent of ``z`` carried by one unit of the storage variable."""
        return 2 if self.parity == EVEN else 1

    @cached_property
    def float_coeffs(self) -> tuple:
        return tuple(float(c) for c in self.coeffs)

    def __len__(self) -> int:
        return len(self.coeffs)

    def __getitem__(self, n: int):
        return self.coeffs[n]

    def z_coeffs(self) -> list:
        """Coefficients of the same function as a plain series in ``z``."""
        out = [0] * (self.z_power + self.step * self.truncation_order + 1)
        for n, c in enumerate(self.coeffs):
            out[self.z_power + self.step * n] = c
        return out

    def truncate(self, order: int) -> "PowerSeries":
        return PowerSeries(self.coeffs[: order + 1], self.parity, self.z_power,
                           self.exact and order >= self.truncation_order)


@dataclass(frozen=True)
class EvalResult:
    value: object
    truncation_bound: float
    # floating-point rounding estimate; 0 for exact arithmetic
    rounding_bound: float = 0.0
    terms_used: int = field(default=0, compare=False)

    @property
    def error_bound(self) -> float:
        return float(self.truncation_bound) + float(self.rounding_bound)

    def certified_sign(self) -> int:
        """Sign of the true value, or 0 when the error bound cannot decide it."""
        v = float(self.value)
        if abs(v) <= self.error_bound:
            return 0
        return 1 if v > 0 else -1


def _tail_start(terms: list) -> int:
    """Smallest m such that terms[m:] alternate in sign and never grow."""
    m = len(terms) - 1
    while m > 0:
        a, b = terms[m - 1], terms[m]
        if abs(b) <= abs(a) and a * b <= 0:
            m -= 1
        else:
            break
    return m


def _is_exact_number(x) -> bool:
    return isinstance(x, (int, Fraction))


def eval_series(s: PowerSeries, z, min_terms: int = 0) -> EvalResult:
    """Evaluate ``s`` at a real point with a rigorous remainder bound.

    Terms are summed up to the first index ``m >= min_terms`` from which the
    stored terms alternate and decrease, stopping early once a term is
    negligible.  ``truncation_bound`` is the magnitude of the first omitted
    term.  The tail beyond the stored order is assumed to keep the same
    pattern, which holds for every catalog series since their coefficient
    ratios tend to zero monotonically.
    """
    if min_terms > s.truncation_order + 1:
        raise ValueError("min_terms exceeds the stored coefficients")
    exact_arith = _is_exact_number(z) and all(_is_exact_number(c) for c in s.coeffs)
    coeffs = s.coeffs if exact_arith or not isinstance(z, float) else s.float_coeffs
    x = z * z if s.parity == EVEN else z

    terms = []
    p = x ** 0
    for c in coeffs:
        terms.append(c * p)
        p = p * x

    if s.exact:
        m, bound = len(terms), 0.0
    else:
        if len(terms) < 2 or abs(terms[-1]) > abs(terms[-2]) or terms[-1] * terms[-2] > 0:
            raise NonConvergent(
                f"terms not alternating-decreasing at order {s.truncation_order} for z={float(z):g}")
        start = max(min_terms, _tail_start(terms))
        biggest = max(abs(t) for t in terms)
        m = len(terms) - 1
        for n in range(max(start, 1), len(terms)):
            if abs(terms[n]) <= _NEGLIGIBLE * biggest:
                m = n
                break
        m = max(m, start)
        bound = float(abs(terms[m])) if m < len(terms) else 0.0

    head = terms[:m]
    if exact_arith:
        value = sum(head, Fraction(0))
        rounding = 0.0
    else:
        value = math.fsum(head) if isinstance(z, float) else sum(head)
        rounding = (m + 3) * _FLOAT_EPS * float(sum(abs(t) for t in head))
    if s.z_power:
        zp = z ** s.z_power
        value = value * zp
        bound *= float(abs(zp))
        rounding *= float(abs(zp))
    return EvalResult(value, bound, rounding, m)


def differentiate(s: PowerSeries) -> PowerSeries:
    """Derivative with respect to ``z``.

    For an even series ``E(t)`` the result is ``z * (2 E'(t))`` stored as an
    even series with ``z_power`` raised by one; a ``z_power`` prefactor is
    handled by the product rule.
    """
    c = s.coeffs
    if s.parity == GENERAL:
        full = s.z_coeffs()
        new = [n * full[n] for n in range(1, len(full))] or [0]
        return PowerSeries(tuple(new), GENERAL, 0, s.exact)
    if s.z_power == 0:
        new = tuple(2 * (n + 1) * c[n + 1] for n in range(len(c) - 1)) or (0,)
        return PowerSeries(new, EVEN, 1, s.exact)
    if s.z_power == 1:
        # d/dz [z E(z^2)] = sum (2n+1) c_n t^n
        return PowerSeries(tuple((2 * n + 1) * cn for n, cn in enumerate(c)), EVEN, 0, s.exact)
    full = s.z_coeffs()
    new = [n * full[n] for n in range(1, len(full))]
    return PowerSeries(tuple(new), GENERAL, 0, s.exact)


def series_power(s: PowerSeries, exponent, order: int | None = None) -> PowerSeries:
    """Coefficients of ``s**exponent`` for a normalized series (same variable).

    Uses the recurrence ``n b_n = sum_k ((exponent+1) k - n) c_k b_{n-k}``.
    """
    if s.coeffs[0] != 1 or s.z_power:
        raise ValueError("series_power needs a normalized series")
    order = s.truncation_order if order is None else order
    c = list(s.coeffs) + [0] * max(0, order - s.truncation_order)
    b = [c[0] ** 0]
    for n in range(1, order + 1):
        acc = 0
        for k in range(1, n + 1):
            acc += ((exponent + 1) * k - n) * c[k] * b[n - k]
        b.append(Fraction(acc, n) if isinstance(acc, int) else acc / n)
    return PowerSeries(tuple(b), s.parity)
