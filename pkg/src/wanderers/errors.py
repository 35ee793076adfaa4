"""Semantic exception hierarchy.

Public numerical routines never raise bare ValueError; everything a caller
might want to catch carries one of these types. The CLI maps InvalidInput
subclasses to exit code 2 and NumericalFailure subclasses to exit code 3.
"""


class WandererError(Exception):
    """Base error for the package."""


class InvalidInputError(WandererError, ValueError):
    """Arguments violate a documented precondition (CLI exit code 2)."""


class InvalidGeometryError(InvalidInputError):
    """Contour construction parameters are unusable (bad radius, separation...)."""


class RegimeError(InvalidInputError):
    """Wanderer endpoint configuration is in the wrong regime for the call."""


class DomainError(InvalidInputError):
    """Scalar argument outside the mathematical domain of the operation."""


class NumericalFailureError(WandererError, ArithmeticError):
    """Computation produced unusable numbers (CLI exit code 3)."""


class QuadratureInstabilityError(NumericalFailureError):
    """Imaginary residue of a kernel value exceeded tolerance."""


class PoleOnContourError(NumericalFailureError):
    """A pole of the integrand lies (numerically) on a quadrature node."""


class MisalignedPathError(InvalidInputError):
    """Contour does not pass through the requested critical point."""


class IllConditionedError(NumericalFailureError):
    """Moment matrix too ill-conditioned to invert reliably."""


class OutOfRangeError(InvalidInputError):
    """Argument outside the numerically supported range."""


class InfeasibleSamplingError(NumericalFailureError):
    """Rejection sampler acceptance rate collapsed."""
