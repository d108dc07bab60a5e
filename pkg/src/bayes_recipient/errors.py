"""Exception types shared across the package."""


class DomainError(ValueError):
    """An argument lies outside the domain of the function."""


class ConvergenceError(ArithmeticError):
    """An iterative method ran out of budget before meeting its tolerance.

    The best estimate reached so far is kept on ``estimate`` so callers can
    decide whether it is usable.
    """

    def __init__(self, message, estimate=None):
        super().__init__(message)
        self.estimate = estimate


class ValidationFormatError(ValueError):
    """Validation records are malformed or mix numeric and categorical outcomes."""


class UsageError(ValueError):
    """A query combines inputs that do not belong together."""
