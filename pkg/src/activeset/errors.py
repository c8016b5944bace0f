"""Exception hierarchy shared by every module."""


class ActiveSetError(Exception):
    """Base class for all package errors."""


class InvalidInput(ActiveSetError, ValueError):
    pass


class InvalidStep(InvalidInput):
    pass


class UnbalancedPath(InvalidInput):
    pass


class LineOutOfRange(InvalidInput):
    pass


class NotSubdiagonal(InvalidInput):
    pass


class LineNotActive(InvalidInput):
    pass


class LineNotInactive(InvalidInput):
    pass


class BudgetExceeded(ActiveSetError):
    """Enumeration would generate more paths than the configured cap."""


class InternalAssertion(ActiveSetError, AssertionError):
    """A guarantee the construction relies on did not hold.

    Raised instead of returning a silently wrong answer; the message carries
    the offending path and line so the case can be replayed.
    """
