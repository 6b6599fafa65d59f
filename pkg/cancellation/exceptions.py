class CancellationError(ValueError):
    """Base class for every error raised by the cancellation package."""


class DigitError(CancellationError):
    """A digit lies outside [0, base), a digit string is empty, or the base is below 2."""


class WidthError(CancellationError):
    """A width is too small for a value, or a number has the wrong digit count."""


class BlockError(CancellationError):
    """A block value does not fit the width allotted to it."""


class NotASolutionError(CancellationError):
    """The number lacks the property an operation requires."""


class TupleRangeError(CancellationError):
    """A generating tuple violates 1 < ck < b < base."""


class BaseError(CancellationError):
    """The base does not satisfy an operation's precondition."""


class WorkLimitExceeded(CancellationError):
    """
    Raised by the brute-force oracle instead of starting a scan that needs more
    predicate evaluations than allowed.
    """

    def __init__(self, required, limit):
        self.required = required
        self.limit = limit
        super().__init__(
            f"Work limit exceeded: the scan needs {required} predicate evaluations "
            f"but the limit is {limit}."
        )
