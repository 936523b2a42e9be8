"""Shared oracles.

The oracles avoid the package's own machinery: mpmath evaluates the special
functions directly and sympy expands the defining formulas symbolically.
"""
from fractions import Fraction

import mpmath
import pytest
import sympy as sp

from radii.catalog import Family, FamilyParams


def mp_bisect(f, lo, hi, digits=40, tol="1e-30"):
    """Plain bisection in extended precision; ``f(lo)`` and ``f(hi)`` must differ in sign."""
    with mpmath.workdps(digits):
        lo, hi, tol = mpmath.mpf(lo), mpmath.mpf(hi), mpmath.mpf(tol)
        flo = f(lo)
        assert flo * f(hi) < 0
        while hi - lo > tol:
            mid = (lo + hi) / 2
            fm = f(mid)
            if fm * flo > 0:
                lo, flo = mid, fm
            else:
                hi = mid
        return (lo + hi) / 2


def mp_series_zero(coeffs, parity, lo, hi):
    """Zero of a truncated series in z, summed in extended precision."""
    cs = [mpmath.mpf(c.numerator) / c.denominator for c in map(Fraction, coeffs)]

    def f(z):
        x = z * z if parity == "even" else z
        return mpmath.fsum(c * x ** n for n, c in enumerate(cs))

    return mp_bisect(f, lo, hi)


@pytest.fixture(scope="session")
def j0_zero_oracle():
    """First positive zero of J0: bisection on a 60-term series at 40 digits."""
    coeffs = [Fraction((-1) ** n, 4 ** n * sp.factorial(n) ** 2) for n in range(60)]
    return float(mp_series_zero(coeffs, "even", 2, 3))


def sym_rf(x, n):
    return sp.rf(x, n)


@pytest.fixture(scope="session")
def symbols():
    return sp.symbols("alpha nu mu z", real=True)


def to_fraction(expr) -> Fraction:
    expr = sp.nsimplify(expr)
    r = sp.Rational(expr)
    return Fraction(int(r.p), int(r.q))


def params(family, **values):
    return FamilyParams(Family(family), **{k: Fraction(v) for k, v in values.items()})


# PASS/FAIL lines from the acceptance suite, echoed after the run
ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
