"""
Exception hierarchy shared by the special-function, quadrature and model modules.

Argument-domain problems subclass ValueError so callers that only guard against
bad input keep working; numerical failures derive from NumericalError.
"""


class FracEvoError(Exception):
    """Base class for all toolkit errors."""


class NumericalError(FracEvoError):
    """A computation ran but could not deliver the requested accuracy."""


class NonConvergenceError(NumericalError):
    """A series estimate was truncated at max_terms or dominated by cancellation."""


class ToleranceNotMetError(NumericalError):
    """Adaptive quadrature exhausted its node budget before reaching abs_tol."""


class DivergentStripError(NumericalError):
    """A Mellin integral was requested outside its convergence strip."""


class RangeExceededError(NumericalError):
    """A subordination integral needs the solution beyond its declared T_max."""


class DiracCaseError(FracEvoError, ValueError):
    """The (alpha, beta) = (1, 1) form factor is a Dirac mass, not a function."""


class StripViolationError(FracEvoError, ValueError):
    """A closed-form Mellin transform was evaluated outside its strip."""


class SingularOriginError(FracEvoError, ValueError):
    """The fractional heat kernel diverges at r = 0 for n >= 2."""


class KinkError(FracEvoError, ValueError):
    """Residual grid mixes tiny tau with a spot next to the strike."""


class KinkWarning(UserWarning):
    """Spot close to strike; second derivatives of the price are large."""
