"""Euler-Rayleigh bounds for the first zero of J0, step by step."""
# %%
from fractions import Fraction

import numpy as np

from radii import bessel_j_series, bound_ladder, power_sums
from radii.rayleigh import variable_map
from radii.series import EVEN

# normalized J0 in t = z^2: sum (-1)^n t^n / (4^n n!^2)
j0 = bessel_j_series(0)
j0.coeffs[:4]

# %%
# power sums of 1/t_n over the zeros t_n = j_{0,n}^2, exact rationals
sums = power_sums(j0, 6)
print(sums.sums)
assert sums[1] == Fraction(1, 4) and sums[2] == Fraction(1, 32)

# %%
# each rung k gives S_k^(-1/k) < t_1 < S_k / S_(k+1); the square root maps back to z
ladder = variable_map(bound_ladder(sums), EVEN)
bounds = np.array(ladder.as_floats())
for k, (lo, hi) in enumerate(bounds, start=1):
    print(f"k={k}  {lo:.12f} < j01 < {hi:.12f}")

# %%
# the bracket shrinks geometrically towards 2.404825557695773
width = bounds[:, 1] - bounds[:, 0]
print(width[1:] / width[:-1])
