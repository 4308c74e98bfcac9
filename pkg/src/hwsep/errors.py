"""Exception types shared across the package."""


class ValidationError(ValueError):
    """An input violates a documented contract (bad dims, non-Hermitian, ...)."""


class NumericalError(RuntimeError):
    """A numerical routine failed to converge or produced non-finite output."""
