"""Exception hierarchy shared by all modules."""


class OrliczError(Exception):
    """Base class for every error raised by this package."""


class DomainError(OrliczError, ValueError):
    """Argument outside the domain of a function (e.g. negative t)."""


class PreconditionError(OrliczError, ValueError):
    """An operation was called on input that does not meet its hypotheses."""


class FinitenessError(PreconditionError):
    """A finite-valued Young function was required."""


class NotStrictError(PreconditionError):
    """The Young function fails the Delta_2 or the Lambda condition."""


class OrderViolationError(PreconditionError):
    """Amplitude orders are not below the admissible threshold."""


class DegenerateFunctionError(OrliczError, ValueError):
    """A Young function vanishes at a positive argument where it must not."""


class SqueezingViolationError(OrliczError):
    """Power-law squeezing constants are unbounded on the sampled range."""


class DivergenceError(OrliczError):
    """A bisection bracket could not be established."""


class CapabilityError(OrliczError):
    """A required derivative is neither declared nor obtainable numerically."""


class SymbolEvaluationError(OrliczError):
    """A symbol produced a non-finite value where one was needed."""


class ResourceError(OrliczError):
    """The requested discretization exceeds the supported size."""
