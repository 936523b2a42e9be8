"""Euler-Rayleigh bounds for the smallest zeros of normalized Bessel, Struve and
Lommel kernels, with certified radii of starlikeness and convexity."""
from .catalog import (Family, FamilyParams, KernelKind, bessel_j_series,
                      convexity_kernel_series, derivative_kernel_series, function_series,
                      kernel_series, lommel_l_series, lommel_s_series, struve_combo_series,
                      struve_series)
from .closed_forms import (THEOREMS, TheoremId, proof_sums, starlike_maclaurin,
                           theorem_bounds, theorem_params)
from .errors import (DomainError, InsufficientOrder, NonConvergent, NonPositiveSum,
                     NoZeroFound, PoleTooClose, PrecisionExhausted, RadiiError,
                     UnsupportedFamily)
from .geometry import (min_re_convex_functional, min_re_star_functional,
                       real_axis_minimum_property)
from .rayleigh import BoundLadder, RayleighSums, Surd, bound_ladder, ladder_for, power_sums
from .series import PowerSeries, eval_series, pochhammer
from .zeros import (RadiusResult, radius_of_convexity, radius_of_starlikeness,
                    smallest_positive_zero, smallest_zero)

__version__ = "0.1.0"
