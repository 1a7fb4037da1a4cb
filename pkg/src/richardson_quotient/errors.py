"""Exception types shared across the package."""


class DimensionError(ValueError):
    """Objects built for different (r, n) were combined."""


class ShapeError(ValueError):
    """A tableau grid or matrix has the wrong shape."""


class DomainError(ValueError):
    """An argument lies outside the domain of the operation."""


class NotDivisibleError(ArithmeticError):
    """Exact polynomial division failed."""


class SearchLimitExceeded(RuntimeError):
    """An enumeration would exceed the configured search-space limit."""


class CertificateError(RuntimeError):
    """A polynomial identity that should hold exactly did not."""
