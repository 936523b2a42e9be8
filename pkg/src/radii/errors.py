"""Exception hierarchy shared by every module of the package."""


class RadiiError(Exception):
    """Base class for all errors raised by :mod:`radii`."""


class DomainError(RadiiError, ValueError):
    """Parameters fall outside the hypothesis domain of a family or theorem."""


class UnsupportedFamily(RadiiError, ValueError):
    """The requested kernel is not defined for this family."""


class NonConvergent(RadiiError, ArithmeticError):
    """Series terms do not start decreasing within the stored coefficients."""


class InsufficientOrder(RadiiError, ValueError):
    """More power sums were requested than the series carries coefficients for."""


class NonPositiveSum(RadiiError, ArithmeticError):
    """A power sum is not positive, so the zeros are not all real and positive."""


class NoZeroFound(RadiiError, ArithmeticError):
    """No certified sign change was found in the scanned region."""


class PrecisionExhausted(RadiiError, ArithmeticError):
    """Evaluation error swamps the function value near a zero."""


class PoleTooClose(RadiiError, ArithmeticError):
    """A denominator on the sampled circle is indistinguishable from zero."""
