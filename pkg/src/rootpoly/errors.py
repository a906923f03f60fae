"""Structured errors shared across the package."""


class RootPolyError(Exception):
    """Base class for all package errors."""


class NonGenericParameterError(RootPolyError):
    """A denominator factor vanished for the supplied parameters.

    ``factor`` is a human-readable rendering of the vanishing factor so
    callers can report exactly which genericity condition failed.
    """

    def __init__(self, factor: str):
        self.factor = factor
        super().__init__(f"vanishing factor: {factor}")


class RationalLimitError(RootPolyError):
    """A requested limit of a rational function does not exist."""
