"""Exception types raised across the package."""


class UnivalentError(Exception):
    """Base class for all package errors."""


class DivisionBySingularSeries(UnivalentError, ZeroDivisionError):
    """Formal division by a series whose constant term is zero."""


class NonUnitConstantTerm(UnivalentError, ValueError):
    """log/sqrt requested for a series whose constant term is not exactly 1."""


class InsufficientTruncation(UnivalentError, ValueError):
    """Input series (or table) is truncated below what the operation consumes."""


class ProvenanceMismatch(UnivalentError, ValueError):
    """A Grunsky table of the wrong kind (direct vs odd) was supplied."""


class UnknownCatalogEntry(UnivalentError, LookupError):
    pass


class ParameterOutOfRange(UnivalentError, ValueError):
    pass


class OutOfRange(UnivalentError, ValueError):
    pass
