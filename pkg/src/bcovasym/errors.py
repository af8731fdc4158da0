"""Exception hierarchy shared by all modules."""


class BcovError(Exception):
    """Base class for all package errors."""


class DimensionError(BcovError):
    """A matrix or table has the wrong shape for the requested operation."""


class InvalidMonodromyError(BcovError):
    """The operator is not (quasi-)unipotent, or is singular.

    ``factor`` optionally carries the offending non-cyclotomic factor of the
    characteristic polynomial, for error reporting.
    """

    def __init__(self, message, factor=None):
        super().__init__(message)
        self.factor = factor


class PreconditionError(BcovError):
    """An operation's stated precondition is violated by the input."""


class InsufficientPrecisionError(BcovError):
    """Truncated series data is too short to certify the result."""


class NotApplicableError(BcovError):
    """A specialized formula was requested outside its hypotheses."""


class MissingDataError(BcovError):
    """A required descriptor field is absent.  ``field`` names it."""

    def __init__(self, message, field=None):
        super().__init__(message)
        self.field = field


class InconsistencyError(BcovError):
    """Two formulas that must agree produced different values."""

    def __init__(self, message, values=None):
        super().__init__(message)
        self.values = values or {}


class DescriptorError(BcovError):
    """A descriptor file failed schema or invariant validation.

    ``path`` is a '/'-joined trail to the offending field.
    """

    def __init__(self, message, path=""):
        super().__init__(message)
        self.path = path
