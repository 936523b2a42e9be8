"""Certified smallest zeros and the closed-form bounds around them."""
# %%
from radii import (FamilyParams, smallest_positive_zero, smallest_zero, theorem_bounds,
                   bessel_j_series)

res = smallest_positive_zero(bessel_j_series(0), tol=1e-14)
print(res.value, res.bracket, res.width)

# %%
# the convexity kernel of g_nu at nu = 0: 2/3 < r < 6 sqrt(2/137)
g0 = FamilyParams("bessel_g", nu=0)
tb = theorem_bounds("T6", g0)
r = smallest_zero(g0)
print([float(b) for b in tb.lowers], r.value, [float(b) for b in tb.uppers])

# %%
# the Struve bounds are on the squared zero, so compare against value**2
h = FamilyParams("struve_combo", alpha=0, nu=0)
zero = smallest_zero(h).value
tb = theorem_bounds("T1", h)
for lo, hi in zip(tb.lowers, tb.uppers):
    print(f"{float(lo):.6f} < {zero ** 2:.6f} < {float(hi):.6f}")
