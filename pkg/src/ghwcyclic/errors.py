"""Exception types shared across the package."""


class GHWError(Exception):
    """Base class for all package errors."""


class InvalidParameterError(GHWError, ValueError):
    """Parameters violate a precondition (non-prime p, gcd(n, q) != 1, ...)."""


class CapExceededError(GHWError):
    """A configured size cap would be exceeded.

    ``cap_name`` names the cap so front ends can report it.
    """

    def __init__(self, cap_name, value, cap):
        self.cap_name = cap_name
        self.value = value
        self.cap = cap
        super().__init__(f"{cap_name} exceeded: {value} > {cap}")


class CrossCheckError(GHWError):
    """Two independent routes disagree, or a provable invariant failed."""


class PrecisionError(CrossCheckError):
    """Floating-point evaluation drifted past its tolerance."""
