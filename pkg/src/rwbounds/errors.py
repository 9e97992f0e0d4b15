"""Exception hierarchy shared by all modules."""


class RWBoundsError(Exception):
    """Base class for every error raised by the package."""


class ValidationError(RWBoundsError, ValueError):
    """Input that never describes a usable distribution or query."""


class InvalidParameter(ValidationError):
    pass


class NonPositiveMean(ValidationError):
    pass


class NoNegativeMass(ValidationError):
    pass


class NumericalError(RWBoundsError, ArithmeticError):
    """A well-posed computation that failed numerically."""


class MomentDiverges(NumericalError):
    pass


class EmptyConditioningSet(NumericalError):
    pass


class NoRoot(NumericalError):
    pass


class ToleranceNotMet(NumericalError):
    pass


class DivergentExcess(NumericalError):
    """The unrestricted excess supremum is infinite.

    ``capped_value`` holds the value restricted to ``cap`` when the caller
    supplied one, so bounds can still be formed.
    """

    def __init__(self, side, capped_value=None, cap=None):
        self.side = side
        self.capped_value = capped_value
        self.cap = cap
        super().__init__(f"d_{side} is infinite (power-law tail)")


class StepLimitExceeded(NumericalError):
    pass


class OverflowGuard(NumericalError):
    pass


class EmptyTail(ValidationError):
    pass
