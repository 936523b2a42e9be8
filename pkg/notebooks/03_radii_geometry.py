"""Radii of starlikeness and convexity, checked on circles around the origin."""
# %%
import numpy as np

from radii import (FamilyParams, min_re_convex_functional, min_re_star_functional,
                   radius_of_convexity, radius_of_starlikeness)

w = FamilyParams("struve_w", nu="1/2")
rc = radius_of_convexity(w).value
rc

# %%
# Re(1 + z w''/w') stays positive inside the radius and turns negative just past it
for scale in (0.5, 0.95, 1.0, 1.05):
    scan = min_re_convex_functional(w, scale * rc, 512)
    print(f"{scale:4}  min Re = {scan.min_real_part:+.6f} at angle {scan.argmin_angle:.3f}")

# %%
# starlikeness: the smallest zero of the derivative kernel
radii = {}
for nu in np.linspace(-0.5, 0.5, 5):
    p = FamilyParams("struve_deriv", nu=float(nu))
    radii[nu] = radius_of_starlikeness(p).value
radii

# %%
p = FamilyParams("lommel_f", mu="1/2")
r = radius_of_starlikeness(p).value
min_re_star_functional(p, 0.95 * r).min_real_part, min_re_star_functional(p, 1.05 * r).min_real_part
