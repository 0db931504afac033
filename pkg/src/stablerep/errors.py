"""Exception types shared across the package."""


class StableRepError(Exception):
    """Base class for all package-specific errors."""


class SizeBudgetExceeded(StableRepError):
    """A construction would exceed the configured ambient-dimension budget."""

    def __init__(self, needed: int, budget: int, what: str = "ambient dimension"):
        self.needed = needed
        self.budget = budget
        super().__init__(f"{what} {needed} exceeds budget {budget}")


class InvalidArgs(StableRepError, ValueError):
    """Arguments violate a documented precondition."""


class NonIntegralMultiplicity(StableRepError):
    """A class function asserted to be a genuine character has a non-integral
    inner product with some irreducible."""


class NegativeMultiplicity(StableRepError):
    """A class function asserted to be a genuine character has a negative
    multiplicity."""


class NonPolynomialAction(StableRepError):
    """A module claimed to carry a polynomial gl action has a torus weight
    with a negative entry."""


class OracleDisagreement(StableRepError):
    """Two independent computation paths returned different answers; this
    always signals an implementation bug."""
