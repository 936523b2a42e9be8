"""Euler-Rayleigh power sums and sandwich bounds for the smallest zero.

For a normalized entire function ``1 + a_1 x + a_2 x^2 + ...`` whose zeros
``x_n`` are all real and positive, the power sums ``S_k = sum x_n^-k`` follow
from the Newton identities

    S_1 = -a_1,    S_k = -k a_k - sum_{j=1}^{k-1} a_j S_{k-j},

and the smallest zero satisfies ``S_k^(-1/k) < x_1 < S_k / S_{k+1}``.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import total_ordering

from .errors import InsufficientOrder, NonPositiveSum
from .series import EVEN, PowerSeries

DEFAULT_K = 6

_FLOAT_EPS = 2.0 ** -53


def _exact(x) -> bool:
    return isinstance(x, (int, Fraction))


@total_ordering
class Surd:
    """The real number ``coeff * radicand ** (1/index)``.

    Kept unevaluated so that bounds built from rational data can be compared
    for exact equality and order.  A negative radicand is allowed only with
    an odd index; its sign is moved into the coefficient.
    """

    __slots__ = ("coeff", "radicand", "index")

    def __init__(self, coeff, radicand=1, index: int = 1):
        if index < 1:
            raise ValueError("index must be a positive integer")
        if radicand < 0:
            if index % 2 == 0:
                raise ValueError("even root of a negative number")
            coeff, radicand = -coeff, -radicand
        self.coeff = coeff
        self.radicand = radicand
        self.index = int(index)

    def __repr__(self) -> str:
        if self.index == 1:
            return f"Surd({self.coeff * self.radicand})"
        return f"Surd({self.coeff} * ({self.radicand})^(1/{self.index}))"

    def __float__(self) -> float:
        return float(self.coeff) * float(self.radicand) ** (1.0 / self.index)

    @property
    def is_exact(self) -> bool:
        return _exact(self.coeff) and _exact(self.radicand)

    def sign(self) -> int:
        if self.coeff == 0 or self.radicand == 0:
            return 0
        return 1 if self.coeff > 0 else -1

    def power(self, n: int):
        """``self ** n`` for a multiple ``n`` of the index (a plain number)."""
        if n % self.index:
            raise ValueError("power must be a multiple of the index")
        return self.coeff ** n * self.radicand ** (n // self.index)

    def sqrt(self) -> "Surd":
        if self.sign() < 0:
            raise ValueError("square root of a negative surd")
        return Surd(1, self.coeff ** self.index * self.radicand, 2 * self.index)

    @staticmethod
    def _coerce(other) -> "Surd":
        return other if isinstance(other, Surd) else Surd(other)

    def _compare(self, other) -> int:
        other = self._coerce(other)
        if not (self.is_exact and other.is_exact):
            a, b = float(self), float(other)
            return (a > b) - (a < b)
        sa, sb = self.sign(), other.sign()
        if sa != sb:
            return (sa > sb) - (sa < sb)
        if sa == 0:
            return 0
        n = math.lcm(self.index, other.index)
        a, b = abs(self.power(n)), abs(other.power(n))
        c = (a > b) - (a < b)
        return c if sa > 0 else -c

    def __eq__(self, other) -> bool:
        if not isinstance(other, (Surd, int, float, Fraction)):
            return NotImplemented
        return self._compare(other) == 0

    def __lt__(self, other) -> bool:
        return self._compare(other) < 0

    def __hash__(self):
        return hash(float(self))


@dataclass(frozen=True)
class RayleighSums:
    """Power sums ``S_1..S_K`` of reciprocal zeros, in the series' own variable."""

    sums: tuple
    # per-sum relative error estimate in float mode; zeros when exact
    relative_errors: tuple = ()

    def __len__(self) -> int:
        return len(self.sums)

    def __getitem__(self, k: int):
        """1-based access: ``sums[1]`` is ``S_1``."""
        if k < 1:
            raise IndexError("power sums are indexed from 1")
        return self.sums[k - 1]

    @property
    def exact(self) -> bool:
        return all(_exact(s) for s in self.sums)

    def cauchy_schwarz_ok(self) -> bool:
        """``S_{k-1} S_{k+1} >= S_k^2`` for every interior k."""
        return all(self[k - 1] * self[k + 1] >= self[k] ** 2 for k in range(2, len(self)))


def power_sums(s: PowerSeries, K: int) -> RayleighSums:
    if not s.constant_term_normalized:
        raise ValueError("power_sums needs a series with constant term 1")
    a = s.coeffs
    if K > s.truncation_order:
        if not s.exact:
            raise InsufficientOrder(f"K={K} needs {K} coefficients beyond the constant, "
                                    f"series has {s.truncation_order}")
        # a polynomial's missing coefficients are zero
        a = a + (0,) * (K - s.truncation_order)
    exact = all(_exact(c) for c in a[: K + 1])
    sums: list = []
    errs: list = []
    for k in range(1, K + 1):
        parts = [-k * a[k]] + [-a[j] * sums[k - j - 1] for j in range(1, k)]
        if exact:
            sums.append(sum(parts, Fraction(0)))
            errs.append(0.0)
            continue
        value = math.fsum(float(p) for p in parts)
        spread = sum(abs(float(p)) for p in parts)
        inherited = sum(abs(float(a[j])) * errs[k - j - 1] * abs(float(sums[k - j - 1]))
                        for j in range(1, k))
        sums.append(value)
        errs.append((k * _FLOAT_EPS * spread + inherited) / abs(value) if value else math.inf)
    return RayleighSums(tuple(sums), tuple(errs))


@dataclass(frozen=True)
class BoundLadder:
    """Entries ``(lower_k, upper_k)`` for ``k = 1..K-1`` around the smallest zero."""

    entries: tuple
    variable: str = "x"

    def __len__(self) -> int:
        return len(self.entries)

    def __getitem__(self, k: int):
        """1-based access matching the order ``k`` of the inequality."""
        if k < 1:
            raise IndexError("ladder entries are indexed from 1")
        return self.entries[k - 1]

    @property
    def lowers(self) -> list:
        return [lo for lo, _ in self.entries]

    @property
    def uppers(self) -> list:
        return [hi for _, hi in self.entries]

    def is_monotone(self) -> bool:
        lo, hi = self.lowers, self.uppers
        return (all(a <= b for a, b in zip(lo, lo[1:]))
                and all(a >= b for a, b in zip(hi, hi[1:])))

    def is_ordered(self) -> bool:
        return all(lo < hi for lo, hi in self.entries)

    def as_floats(self) -> list:
        return [(float(lo), float(hi)) for lo, hi in self.entries]


def bound_ladder(sums: RayleighSums) -> BoundLadder:
    if len(sums) < 2:
        raise ValueError("a ladder needs at least S_1 and S_2")
    for k, value in enumerate(sums.sums, start=1):
        if not value > 0:
            raise NonPositiveSum(f"S_{k} = {value} is not positive; zeros are not all real and positive")
    entries = []
    for k in range(1, len(sums)):
        s_k, s_next = sums[k], sums[k + 1]
        entries.append((Surd(1, 1 / s_k, k), Surd(1, s_k / s_next, 1)))
    return BoundLadder(tuple(entries), "x")


def variable_map(ladder: BoundLadder, parity: str) -> BoundLadder:
    """Map bounds on ``t = z^2`` to bounds on ``z``; identity for general parity."""
    if parity != EVEN:
        return ladder
    return BoundLadder(tuple((lo.sqrt(), hi.sqrt()) for lo, hi in ladder.entries), "z")


def ladder_for(s: PowerSeries, K: int = DEFAULT_K) -> BoundLadder:
    """Ladder of depth ``K`` on the smallest positive zero of ``s`` in ``z``.

    Needs ``K + 1`` power sums, since the upper bound of order K uses ``S_{K+1}``.
    """
    return variable_map(bound_ladder(power_sums(s, K + 1)), s.parity)
