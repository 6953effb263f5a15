"""Exception hierarchy shared by all modules."""


class TPError(ValueError):
    """Base class for every error raised by this package."""


class ParseError(TPError):
    pass


class TruncationError(TPError):
    """A computation needs coefficients beyond the series' truncation order."""


class NormalizationError(TPError):
    """The series does not have constant term exactly 1."""


class NotInvertibleError(TPError):
    pass


class DomainError(TPError):
    """An argument lies outside the domain of the operation."""
