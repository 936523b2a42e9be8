from fractions import Fraction

import pytest
import sympy as sp

from radii.catalog import Family, FamilyParams, kernel_series
from radii.closed_forms import (CONSTANTS, THEOREMS, BOUNDED_THEOREMS, TheoremId, check_hypothesis,
                                kappa1, kappa2, nu_double_star, nu_star, proof_sums,
                                starlike_maclaurin, theorem_bounds, theorem_params)
from radii.errors import DomainError, NonPositiveSum
from radii.rayleigh import bound_ladder, power_sums, variable_map

from conftest import params

NU, ALPHA, MU = sp.symbols("nu alpha mu")

SAMPLES = {
    TheoremId.T1: [{"alpha": "1/2", "nu": "-1/5"}, {"alpha": 3, "nu": "2/5"}],
    TheoremId.T2: [{"nu": "-2/5"}, {"nu": "1/3"}],
    TheoremId.T3: [{"mu": "-1/3"}, {"mu": "3/5"}],
    TheoremId.T6: [{"nu": "-1/2"}, {"nu": 2}],
    TheoremId.T7: [{"nu": "-3/4"}, {"nu": "7/3"}],
    TheoremId.T8: [{"nu": "-1/2"}, {"nu": "1/5"}],
    TheoremId.T9: [{"nu": "-1/3"}, {"nu": "1/2"}],
}


def symbolic_sums(coeff, K):
    """Newton recursion on symbolic coefficients ``coeff(n)``."""
    a = [sp.nsimplify(coeff(n)) for n in range(K + 1)]
    sums = []
    for k in range(1, K + 1):
        s = -k * a[k] - sum(a[j] * sums[k - j - 1] for j in range(1, k))
        sums.append(sp.factor(sp.simplify(s)))
    return sums


def rat(value) -> Fraction:
    value = sp.Rational(value)
    return Fraction(int(value.p), int(value.q))


class TestConstants:
    def test_kappa(self):
        assert kappa1(0, 0) == 135
        assert kappa2(0, 0) == 14931
        assert kappa1(1, 0) == 184

    def test_nu_polynomials(self):
        assert nu_star(0) == 24017715
        assert nu_double_star(0) == 11828151
        x = Fraction(-1, 2)
        monomial = sum(c * x ** i for i, c in enumerate(CONSTANTS["nu_star"]))
        assert nu_star(x) == monomial

    def test_restated_alpha_zero_polynomials(self):
        for nu in (Fraction(-1, 3), Fraction(0), Fraction(2, 7)):
            assert kappa1(0, nu) == sum(c * nu ** i for i, c in enumerate(CONSTANTS["t2_kappa1"]))
            assert kappa2(0, nu) == sum(c * nu ** i for i, c in enumerate(CONSTANTS["t2_kappa2"]))


class TestProofSums:
    def test_examples(self):
        assert proof_sums("T8", params("struve_u", nu="1/2"))[1] == Fraction(3, 4)
        assert proof_sums("T9", params("struve_w", nu=0))[2] == Fraction(238, 2025)
        assert proof_sums("T1", params("struve_combo", alpha=0, nu=0))[2] == Fraction(1, 15)

    @pytest.mark.parametrize("theorem", BOUNDED_THEOREMS)
    def test_match_recursion(self, theorem):
        fam = THEOREMS[theorem].family
        for values in SAMPLES[theorem]:
            p = params(fam, **values)
            stated = proof_sums(theorem, p)
            generic = power_sums(kernel_series(p, THEOREMS[theorem].kernel), len(stated))
            assert stated.sums == generic.sums

    @pytest.mark.parametrize("theorem", BOUNDED_THEOREMS)
    def test_bounds_are_ladder(self, theorem):
        info = THEOREMS[theorem]
        for values in SAMPLES[theorem]:
            p = params(info.family, **values)
            kernel = kernel_series(p, info.kernel)
            # one sum past the displayed ones for the last upper rung
            ladder = bound_ladder(power_sums(kernel, len(proof_sums(theorem, p)) + 1))
            if info.target_power == 1:
                ladder = variable_map(ladder, kernel.parity)
            tb = theorem_bounds(theorem, p)
            assert tb.lowers == ladder.lowers[: len(tb.lowers)]
            assert tb.uppers == ladder.uppers[: len(tb.uppers)]
            assert tb.consistent()


class TestSymbolicAdjudication:
    """Symbolic power sums in the parameter, compared with both the corrected and displayed forms."""

    def test_t6_fourth_sum(self):
        kappa = lambda n: (-1) ** n * (2 * n + 1) ** 2 / (4 ** n * sp.factorial(n) * sp.rf(NU + 1, n))
        rho = symbolic_sums(kappa, 4)
        assert sp.simplify(rho[0] - 9 / (4 * (NU + 1))) == 0
        num = sum(c * NU ** i for i, c in enumerate(CONSTANTS["rho4_num"]))
        den = (NU + 1) ** 4 * (NU + 2) ** 2 * (NU + 3) * (NU + 4)
        assert sp.simplify(rho[3] - num / (256 * den)) == 0
        assert sp.simplify(rho[3] - num / (216 * den)) != 0
        nu = Fraction(1, 3)
        p = params("bessel_g", nu=nu)
        assert proof_sums("T6", p)[4] == rat(rho[3].subs(NU, sp.Rational(1, 3)))
        assert proof_sums("T6", p, verbatim=True)[4] != proof_sums("T6", p)[4]

    def test_t1_third_sum(self):
        def coeff(n):
            return ((-1) ** n * (2 * n + NU + ALPHA + 1)
                    / ((NU + ALPHA + 1) * 4 ** n * sp.rf(sp.Rational(3, 2), n) * sp.rf(NU + sp.Rational(3, 2), n)))
        delta = symbolic_sums(coeff, 3)
        k2 = sum(c * ALPHA ** i * NU ** j for (i, j), c in CONSTANTS["kappa2"].items())
        quad = sum(c * NU ** i for i, c in enumerate(CONSTANTS["delta3_quadratic"]))
        base = 945 * (2 * NU + 3) ** 3 * quad
        s = ALPHA + NU + 1
        assert sp.simplify(delta[2] - k2 / (base * s ** 3)) == 0
        assert sp.simplify(delta[2] - k2 / (base * s ** 2)) != 0
        p = params("struve_combo", alpha="1/2", nu="1/4")
        assert proof_sums("T1", p, verbatim=True)[3] != proof_sums("T1", p)[3]

    def test_t8_symbolic(self):
        coeff = lambda n: ((-1) ** n * (2 * n + 1)
                           / (4 ** n * sp.rf(sp.Rational(1, 2), n) * sp.rf(NU + sp.Rational(3, 2), n)))
        chi = symbolic_sums(coeff, 4)
        star = sum(c * NU ** i for i, c in enumerate(CONSTANTS["nu_star"]))
        expected = star / (315 * (2 * NU + 3) ** 4 * (2 * NU + 5) ** 2 * (2 * NU + 7) * (2 * NU + 9))
        assert sp.simplify(chi[3] - expected) == 0


class TestBounds:
    def test_t6_at_zero(self):
        tb = theorem_bounds("T6", params("bessel_g", nu=0))
        assert tb.lowers[0] == Fraction(2, 3)
        assert float(tb.uppers[0]) == pytest.approx(6 * (2 / 137) ** 0.5)

    def test_t7_at_zero(self):
        tb = theorem_bounds("T7", params("bessel_h", nu=0))
        assert 1 in tb.lowers
        assert Fraction(32, 23) in tb.uppers

    def test_t9_at_half(self):
        tb = theorem_bounds("T9", params("struve_w", nu="1/2"))
        assert tb.lowers[0] == 3
        assert tb.uppers[0] == Fraction(60, 11)

    def test_t2_is_t1_at_alpha_zero(self):
        for nu in ("-9/20", "0", "1/3"):
            t1 = theorem_bounds("T1", params("struve_combo", alpha=0, nu=nu))
            t2 = theorem_bounds("T2", params("struve_deriv", nu=nu))
            assert t1.lowers == t2.lowers and t1.uppers == t2.uppers


class TestHypotheses:
    def test_t3_mu_zero(self):
        with pytest.raises(DomainError, match="mu != 0"):
            theorem_params("T3", mu=0)

    def test_t2_open_interval(self):
        with pytest.raises(DomainError, match="T2"):
            theorem_params("T2", nu="1/2")
        theorem_params("T4", nu="1/2")

    def test_family_mismatch(self):
        with pytest.raises(DomainError):
            check_hypothesis("T6", params("bessel_h", nu=0))

    def test_no_bounds_for_starlike_theorems(self):
        with pytest.raises(DomainError):
            theorem_bounds("T4", params("struve_deriv", nu=0))

    def test_t3_below_minus_half(self):
        # the first power sum is negative there, so no ladder exists
        p = params("lommel_l", mu="-3/4")
        assert proof_sums("T3", p)[1] < 0
        with pytest.raises(NonPositiveSum):
            bound_ladder(proof_sums("T3", p))


class TestMaclaurin:
    @staticmethod
    def expand(sigma_coeff, exponent):
        z = sp.Symbol("z")
        sigma = sum(sigma_coeff(n) * z ** (2 * n) for n in range(4))
        return sp.Poly(sp.series(z * sigma ** exponent, z, 0, 7).removeO(), z)

    def test_struve_map(self):
        nu = sp.Rational(1, 3)
        poly = self.expand(lambda n: (-1) ** n / (4 ** n * sp.rf(sp.Rational(3, 2), n)
                                                  * sp.rf(nu + sp.Rational(3, 2), n)), 1 / (nu + 1))
        m = starlike_maclaurin("T4", params("struve_deriv", nu="1/3"))
        assert m[3] == rat(poly.coeff_monomial(sp.Symbol("z") ** 3))
        assert m[5] == rat(poly.coeff_monomial(sp.Symbol("z") ** 5))
        verbatim = starlike_maclaurin("T4", params("struve_deriv", nu="1/3"), verbatim=True)
        assert verbatim[3] == m[3] and verbatim[5] != m[5]

    def test_lommel_map(self):
        mu = sp.Rational(1, 2)
        poly = self.expand(lambda n: (-1) ** n / (4 ** n * sp.rf((mu + 2) / 2, n) * sp.rf((mu + 3) / 2, n)),
                           1 / (mu + sp.Rational(1, 2)))
        m = starlike_maclaurin("T5", params("lommel_f", mu="1/2"))
        z = sp.Symbol("z")
        assert m[3] == rat(poly.coeff_monomial(z ** 3))
        assert m[5] == rat(poly.coeff_monomial(z ** 5))
        # the closed z^3 form
        assert m[3] == Fraction(-2) / ((mu + 2) * (mu + 3) * (2 * mu + 1))
        verbatim = starlike_maclaurin("T5", params("lommel_f", mu="1/2"), verbatim=True)
        assert verbatim[5] != m[5]
