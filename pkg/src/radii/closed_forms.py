"""Explicit bound formulas and symbolic power sums for the theorems T1-T9.

Each theorem's inequalities are transcribed term by term.  The polynomials
they share live in :data:`CONSTANTS` as exact integer coefficient tables;
both the power sums and the bounds read from there, so a corrupted constant
shows up as a disagreement with the generic Newton recursion in
:mod:`radii.rayleigh`.

Two of the commonly stated power sums disagree with the recursion and with
the bounds they feed: the third sum of T1 carries ``(alpha+nu+1)^3`` in its
denominator (stated with exponent 2), and the fourth sum of T6 has
denominator constant 256 (stated as 216).  :func:`proof_sums` returns the
consistent values; ``verbatim=True`` returns the stated ones.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass, field
from fractions import Fraction

from .catalog import HALF, Family, FamilyParams, KernelKind
from .errors import DomainError
from .rayleigh import RayleighSums, Surd

# Ascending coefficient tuples in nu (or mu); bivariate tables map
# (alpha power, nu power) -> coefficient.
CONSTANTS: dict = {
    "kappa1": {(2, 1): -2, (2, 0): 7, (1, 2): -4, (1, 1): 2, (1, 0): 42,
               (0, 3): -2, (0, 2): -5, (0, 1): 72, (0, 0): 135},
    "kappa2": {(3, 2): -4, (3, 1): -96, (3, 0): 145,
               (2, 3): -12, (2, 2): -324, (2, 1): -429, (2, 0): 1305,
               (1, 4): -12, (1, 3): -360, (1, 2): -1689, (1, 1): 1170, (1, 0): 6291,
               (0, 5): -4, (0, 4): -132, (0, 3): -1115, (0, 2): 621, (0, 1): 12339,
               (0, 0): 14931},
    "delta3_quadratic": (35, 24, 4),
    # T2 restates the alpha = 0 polynomials on its own
    "t2_kappa1": (135, 72, -5, -2),
    "t2_kappa2": (14931, 12339, 621, -1115, -132, -4),
    "eta1_den": (6, 17, 11, 2),
    "eta2_num": (392, 295, 19, -24, -4),
    "eta3_num": (72384, 85834, 23551, -7672, -4731, -554, 44, 8),
    "rho2_num": (137, 56),
    "rho3_num": (1693, 1172, 208),
    "rho4_num": (223803, 312197, 161424, 36768, 3104),
    "varrho2_num": (23, 7),
    "varrho3_num": (115, 60, 9),
    "varrho4_num": (6195, 7221, 3136, 621, 47),
    "chi2_num": (105, 34),
    "chi3_num": (3213, 1824, 268),
    "nu_star": (24017715, 27626796, 11855904, 2256464, 160336),
    "t8_upper1_num": (135, 144, 36),
    "phi2_num": (119, 26),
    "phi3_num": (8665, 3396, 404),
    "nu_double_star": (11828151, 10793332, 3695776, 588848, 36368),
}


def poly(name: str, x):
    """Evaluate the univariate constant ``name`` at ``x`` by Horner's rule."""
    acc = 0
    for c in reversed(CONSTANTS[name]):
        acc = acc * x + c
    return acc


def poly2(name: str, alpha, nu):
    return sum(c * alpha ** i * nu ** j for (i, j), c in CONSTANTS[name].items())


def kappa1(alpha, nu):
    return poly2("kappa1", alpha, nu)


def kappa2(alpha, nu):
    return poly2("kappa2", alpha, nu)


def nu_star(nu):
    return poly("nu_star", nu)


def nu_double_star(nu):
    return poly("nu_double_star", nu)


class TheoremId(str, enum.Enum):
    T1 = "T1"
    T2 = "T2"
    T3 = "T3"
    T4 = "T4"
    T5 = "T5"
    T6 = "T6"
    T7 = "T7"
    T8 = "T8"
    T9 = "T9"

    def __str__(self) -> str:
        return self.value


@dataclass(frozen=True)
class TheoremInfo:
    family: Family
    kernel: KernelKind
    # bounds are stated for zero**target_power
    target_power: int
    target: str
    has_bounds: bool = True


THEOREMS = {
    TheoremId.T1: TheoremInfo(Family.STRUVE_COMBO, KernelKind.DERIVATIVE_ZERO_KERNEL, 2,
                              "zeta_{nu,1}^2, smallest positive zero of alpha H_nu + z H_nu'"),
    TheoremId.T2: TheoremInfo(Family.STRUVE_DERIV, KernelKind.DERIVATIVE_ZERO_KERNEL, 2,
                              "(h'_{nu,1})^2, smallest positive zero of H_nu'"),
    TheoremId.T3: TheoremInfo(Family.LOMMEL_L, KernelKind.DERIVATIVE_ZERO_KERNEL, 2,
                              "tau_{mu,1}^2, smallest positive zero of z s'_{mu-1/2,1/2}"),
    TheoremId.T4: TheoremInfo(Family.STRUVE_DERIV, KernelKind.DERIVATIVE_ZERO_KERNEL, 1,
                              "radius of starlikeness of the power-normalized Struve map", False),
    TheoremId.T5: TheoremInfo(Family.LOMMEL_F, KernelKind.DERIVATIVE_ZERO_KERNEL, 1,
                              "radius of starlikeness of the power-normalized Lommel map", False),
    TheoremId.T6: TheoremInfo(Family.BESSEL_G, KernelKind.CONVEXITY_KERNEL, 1, "r^c(g_nu)"),
    TheoremId.T7: TheoremInfo(Family.BESSEL_H, KernelKind.CONVEXITY_KERNEL, 1, "r^c(h_nu)"),
    TheoremId.T8: TheoremInfo(Family.STRUVE_U, KernelKind.CONVEXITY_KERNEL, 1, "r^c(u_nu)"),
    TheoremId.T9: TheoremInfo(Family.STRUVE_W, KernelKind.CONVEXITY_KERNEL, 1, "r^c(w_nu)"),
}

BOUNDED_THEOREMS = tuple(t for t, info in THEOREMS.items() if info.has_bounds)


@dataclass(frozen=True)
class TheoremBounds:
    theorem_id: TheoremId
    lowers: list
    uppers: list
    target: str
    target_power: int = 1
    params: FamilyParams | None = field(default=None, compare=False)

    def consistent(self) -> bool:
        return max(self.lowers) < min(self.uppers)


def check_hypothesis(theorem_id, params: FamilyParams) -> TheoremId:
    theorem_id = TheoremId(theorem_id)
    info = THEOREMS[theorem_id]
    if params.family != info.family:
        raise DomainError(f"{theorem_id} concerns {info.family}, got {params.family}")
    if theorem_id == TheoremId.T2 and not abs(params.nu) < HALF:
        raise DomainError("T2 requires |nu| < 1/2")
    if theorem_id == TheoremId.T4 and not abs(params.nu) <= HALF:
        raise DomainError("T4 requires |nu| <= 1/2")
    if theorem_id == TheoremId.T5 and not (-HALF < params.mu < 1 and params.mu != 0):
        raise DomainError("T5 requires mu in (-1/2, 1), mu != 0")
    return theorem_id


def theorem_params(theorem_id, **values) -> FamilyParams:
    """Build validated parameters for ``theorem_id`` from keyword values."""
    theorem_id = TheoremId(theorem_id)
    params = FamilyParams(THEOREMS[theorem_id].family, **values)
    check_hypothesis(theorem_id, params)
    return params


# --- symbolic power sums, one per theorem ---------------------------------

def _t1_sums(alpha, nu, k1, k2, verbatim):
    s = alpha + nu + 1
    d1 = (alpha + nu + 3) / (3 * (2 * nu + 3) * s)
    d2 = k1 / (45 * (2 * nu + 3) ** 2 * (2 * nu + 5) * s ** 2)
    d3 = k2 / (945 * (2 * nu + 3) ** 3 * poly("delta3_quadratic", nu) * s ** (2 if verbatim else 3))
    return (d1, d2, d3)


def _t3_sums(mu):
    e1 = (2 * mu + 5) / poly("eta1_den", mu)
    e2 = poly("eta2_num", mu) / ((mu + 2) ** 2 * (mu + 3) ** 2 * (mu + 4) * (mu + 5) * (2 * mu + 1) ** 2)
    e3 = poly("eta3_num", mu) / ((mu + 2) ** 3 * (mu + 3) ** 3 * (mu + 4) * (mu + 5) * (mu + 6)
                                 * (mu + 7) * (2 * mu + 1) ** 3)
    return (e1, e2, e3)


def _t6_sums(nu, verbatim):
    r1 = 9 / (4 * (nu + 1))
    r2 = poly("rho2_num", nu) / (16 * (nu + 1) ** 2 * (nu + 2))
    r3 = poly("rho3_num", nu) / (32 * (nu + 1) ** 3 * (nu + 2) * (nu + 3))
    r4 = poly("rho4_num", nu) / ((216 if verbatim else 256) * (nu + 1) ** 4 * (nu + 2) ** 2
                                 * (nu + 3) * (nu + 4))
    return (r1, r2, r3, r4)


def _t7_sums(nu):
    return (1 / (nu + 1),
            poly("varrho2_num", nu) / (16 * (nu + 1) ** 2 * (nu + 2)),
            poly("varrho3_num", nu) / (32 * (nu + 1) ** 3 * (nu + 2) * (nu + 3)),
            poly("varrho4_num", nu) / (256 * (nu + 1) ** 4 * (nu + 2) ** 2 * (nu + 3) * (nu + 4)))


def _t8_sums(nu):
    return (3 / (2 * nu + 3),
            poly("chi2_num", nu) / (3 * (2 * nu + 3) ** 2 * (2 * nu + 5)),
            poly("chi3_num", nu) / (5 * (2 * nu + 3) ** 3 * (2 * nu + 5) * (2 * nu + 7)),
            nu_star(nu) / (315 * (2 * nu + 3) ** 4 * (2 * nu + 5) ** 2 * (2 * nu + 7) * (2 * nu + 9)))


def _t9_sums(nu):
    return (4 / (3 * (2 * nu + 3)),
            2 * poly("phi2_num", nu) / (45 * (2 * nu + 3) ** 2 * (2 * nu + 5)),
            4 * poly("phi3_num", nu) / (945 * (2 * nu + 3) ** 3 * (2 * nu + 5) * (2 * nu + 7)),
            2 * nu_double_star(nu) / (14175 * (2 * nu + 3) ** 4 * (2 * nu + 5) ** 2
                                      * (2 * nu + 7) * (2 * nu + 9)))


def proof_sums(theorem_id, params: FamilyParams, verbatim: bool = False) -> RayleighSums:
    """The symbolic power sums behind each theorem, evaluated at ``params``.

    They are sums over the zeros of the kernel in its storage variable: the
    squared zeros for T1-T3, T6 and T8, the zeros themselves for T7 and T9.
    """
    theorem_id = check_hypothesis(theorem_id, params)
    if theorem_id == TheoremId.T1:
        a, nu = params.alpha, params.nu
        sums = _t1_sums(a, nu, kappa1(a, nu), kappa2(a, nu), verbatim)
    elif theorem_id == TheoremId.T2:
        nu = params.nu
        sums = _t1_sums(0 * nu, nu, poly("t2_kappa1", nu), poly("t2_kappa2", nu), verbatim)
    elif theorem_id == TheoremId.T3:
        sums = _t3_sums(params.mu)
    elif theorem_id == TheoremId.T6:
        sums = _t6_sums(params.nu, verbatim)
    elif theorem_id == TheoremId.T7:
        sums = _t7_sums(params.nu)
    elif theorem_id == TheoremId.T8:
        sums = _t8_sums(params.nu)
    elif theorem_id == TheoremId.T9:
        sums = _t9_sums(params.nu)
    else:
        raise DomainError(f"{theorem_id} has no power sums")
    return RayleighSums(tuple(sums))


# --- displayed bounds ----------------------------------------------------

def _t1_bounds(alpha, nu, k1, k2):
    s = alpha + nu + 1
    c = 3 * (2 * nu + 3) * s
    lowers = [Surd(c / (alpha + nu + 3)),
              Surd(c, 5 * (2 * nu + 5) / k1, 2),
              Surd(c, 35 * (2 * nu + 5) * (2 * nu + 7) / k2, 3)]
    uppers = [Surd(15 * (2 * nu + 3) * (2 * nu + 5) * s * (alpha + nu + 3) / k1),
              Surd(21 * (2 * nu + 3) * (2 * nu + 7) * s * k1 / k2)]
    return lowers, uppers


def _t3_bounds(mu):
    e2, e3 = poly("eta2_num", mu), poly("eta3_num", mu)
    c = (mu + 2) * (mu + 3) * (2 * mu + 1)
    lowers = [Surd(c / (2 * mu + 5)),
              Surd(c, (mu + 4) * (mu + 5) / e2, 2),
              Surd(c, (mu + 4) * (mu + 5) * (mu + 6) * (mu + 7) / e3, 3)]
    uppers = [Surd((mu + 2) * (mu + 3) * (mu + 4) * (mu + 5) * (2 * mu + 1) * (2 * mu + 5) / e2),
              Surd((mu + 2) * (mu + 3) * (mu + 6) * (mu + 7) * (2 * mu + 1) * e2 / e3)]
    return lowers, uppers


def _t6_bounds(nu):
    r2, r3, r4 = poly("rho2_num", nu), poly("rho3_num", nu), poly("rho4_num", nu)
    lowers = [Surd(Fraction(2, 3), nu + 1, 2),
              Surd(2, (nu + 1) ** 2 * (nu + 2) / r2, 4),
              Surd(1, 32 * (nu + 1) ** 3 * (nu + 2) * (nu + 3) / r3, 6)]
    uppers = [Surd(6, (nu + 1) * (nu + 2) / r2, 2),
              Surd(1, 2 * r2 * (nu + 1) * (nu + 3) / r3, 2),
              Surd(2, 2 * (nu + 1) * (nu + 2) * (nu + 4) * r3 / r4, 2)]
    return lowers, uppers


def _t7_bounds(nu):
    v2, v3, v4 = poly("varrho2_num", nu), poly("varrho3_num", nu), poly("varrho4_num", nu)
    lowers = [Surd(nu + 1),
              Surd(1, 16 * (nu + 1) ** 2 * (nu + 2) / v2, 2),
              Surd(1, 32 * (nu + 1) ** 3 * (nu + 2) * (nu + 3) / v3, 3)]
    uppers = [Surd(16 * (nu + 1) * (nu + 2) / v2),
              Surd(2 * (nu + 1) * (nu + 3) * v2 / v3),
              Surd(8 * (nu + 1) * (nu + 2) * (nu + 4) * v3 / v4)]
    return lowers, uppers


def _t8_bounds(nu):
    c2, c3 = poly("chi2_num", nu), poly("chi3_num", nu)
    lowers = [Surd(1, (2 * nu + 3) / 3, 2),
              Surd(1, 3 * (2 * nu + 3) ** 2 * (2 * nu + 5) / c2, 4),
              Surd(1, 5 * (2 * nu + 3) ** 3 * (2 * nu + 5) * (2 * nu + 7) / c3, 6)]
    uppers = [Surd(1, poly("t8_upper1_num", nu) / c2, 2),
              Surd(1, 5 * (2 * nu + 3) * (2 * nu + 7) * c2 / (3 * c3), 2),
              Surd(3, 7 * (2 * nu + 3) * (2 * nu + 5) * (2 * nu + 9) * c3 / nu_star(nu), 2)]
    return lowers, uppers


def _t9_bounds(nu):
    p2, p3 = poly("phi2_num", nu), poly("phi3_num", nu)
    lowers = [Surd(3 * (2 * nu + 3) / 4),
              Surd(1, 45 * (2 * nu + 3) ** 2 * (2 * nu + 5) / (2 * p2), 2),
              Surd(1, 945 * (2 * nu + 3) ** 3 * (2 * nu + 5) * (2 * nu + 7) / (4 * p3), 3)]
    uppers = [Surd(30 * (2 * nu + 3) * (2 * nu + 5) / p2),
              Surd(21 * (2 * nu + 3) * (2 * nu + 7) * p2 / (2 * p3)),
              Surd(30 * (2 * nu + 3) * (2 * nu + 5) * (2 * nu + 9) * p3 / nu_double_star(nu))]
    return lowers, uppers


def theorem_bounds(theorem_id, params: FamilyParams) -> TheoremBounds:
    """All displayed lower and upper bounds of a theorem, in display order.

    T1-T3 bound the squared zero; T6-T9 bound the radius itself.
    """
    theorem_id = check_hypothesis(theorem_id, params)
    info = THEOREMS[theorem_id]
    if theorem_id == TheoremId.T1:
        a, nu = params.alpha, params.nu
        lowers, uppers = _t1_bounds(a, nu, kappa1(a, nu), kappa2(a, nu))
    elif theorem_id == TheoremId.T2:
        nu = params.nu
        lowers, uppers = _t1_bounds(0 * nu, nu, poly("t2_kappa1", nu), poly("t2_kappa2", nu))
    elif theorem_id == TheoremId.T3:
        lowers, uppers = _t3_bounds(params.mu)
    elif theorem_id == TheoremId.T6:
        lowers, uppers = _t6_bounds(params.nu)
    elif theorem_id == TheoremId.T7:
        lowers, uppers = _t7_bounds(params.nu)
    elif theorem_id == TheoremId.T8:
        lowers, uppers = _t8_bounds(params.nu)
    elif theorem_id == TheoremId.T9:
        lowers, uppers = _t9_bounds(params.nu)
    else:
        raise DomainError(f"{theorem_id} states no explicit bounds")
    return TheoremBounds(theorem_id, lowers, uppers, info.target, info.target_power, params)


def starlike_maclaurin(theorem_id, params: FamilyParams, verbatim: bool = False) -> dict:
    """Coefficients of ``z^3`` and ``z^5`` of the power-normalized maps of T4/T5.

    The stated ``z^5`` coefficients drop a numerator factor; ``verbatim``
    returns them as stated.
    """
    theorem_id = check_hypothesis(theorem_id, params)
    if theorem_id == TheoremId.T4:
        nu = params.nu
        c3 = -1 / (3 * (nu + 1) * (2 * nu + 3))
        num = 1 if verbatim else 2 * nu ** 2 + 5 * nu + 18
        c5 = num / (90 * (nu + 1) ** 2 * (2 * nu + 3) ** 2 * (2 * nu + 5))
    elif theorem_id == TheoremId.T5:
        mu = params.mu
        c3 = -2 / ((mu + 2) * (mu + 3) * (2 * mu + 1))
        if verbatim:
            c5 = (2 * mu ** 3 + 16 * mu ** 2 + 39 * mu - 16) / (2 * (mu + 2) * (mu + 3) * (mu + 4) * (mu + 5) * (2 * mu + 1) ** 2)
        else:
            c5 = ((2 * mu ** 3 + 5 * mu ** 2 + 3 * mu + 32)
                  / ((mu + 2) ** 2 * (mu + 3) ** 2 * (mu + 4) * (mu + 5) * (2 * mu + 1) ** 2))
    else:
        raise DomainError("Maclaurin displays exist for T4 and T5 only")
    return {1: c3 ** 0, 3: c3, 5: c5}
