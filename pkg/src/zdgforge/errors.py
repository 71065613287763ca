"""Exception types shared across the package."""


class ZdgError(Exception):
    """Base class for all package-specific errors."""


class AssociativityViolation(ZdgError):
    """A structure-constant table fails associativity on a basis triple."""

    def __init__(self, i, j, k):
        self.triple = (i, j, k)
        super().__init__(f"associativity fails on basis triple ({i}, {j}, {k})")


class NotAnIdeal(ZdgError):
    """A subspace passed to quotient() is not a two-sided ideal."""


class CapExceeded(ZdgError):
    """An exhaustive operation would exceed its configured size cap."""


class EvenCharacteristicUnsupported(ZdgError):
    """A commutative-variety certificate was requested at p = 2."""


class RingAxiomViolation(ZdgError):
    """A ring table fails associativity or compatibility; carries a witness."""

    def __init__(self, message, witness=None):
        self.witness = witness
        super().__init__(message)


class IdentityParseError(ZdgError):
    """Syntax error in a polynomial identity expression."""

    def __init__(self, message, position):
        self.position = position
        super().__init__(f"{message} (at position {position})")


class PremiseNotSatisfied(ZdgError):
    """A replayed implication's premise failed, as opposed to its conclusion."""
