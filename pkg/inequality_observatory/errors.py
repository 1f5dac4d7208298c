"""Exception hierarchy for catalog lookups, numerics and witness plumbing."""

from __future__ import annotations


class ObservatoryError(ValueError):
    """Base class for every error raised by the package."""


class InvalidContext(ObservatoryError):
    """Precision context settings that cannot back a classification."""


class InvalidScalar(ObservatoryError):
    """A value that is not a finite real number."""


class InvalidTuple(ObservatoryError):
    """Weighted tuple violating its value or weight constraints."""


class NonPositiveBase(ObservatoryError):
    """Real power requested for a base that is not strictly positive."""


class Overflow(ObservatoryError, OverflowError):
    """Result magnitude beyond the context's representable range."""


class EvaluationOverflow(Overflow):
    """Formula evaluation overflowed while classifying a point."""


class UnknownName(ObservatoryError, KeyError):
    """Name not present in a registry."""

    def __str__(self) -> str:
        return str(self.args[0]) if self.args else ""


class BadParams(ObservatoryError):
    """Parameters outside an entry's constraints."""


class NoComplement(ObservatoryError):
    """Entry has no registered complementary validity set."""


class SamplerMissing(ObservatoryError):
    """Descriptor cannot draw points from its validity set."""


class PointOutsideValidity(ObservatoryError):
    """Point handed to a witness lies outside the entry's validity set."""


class UnsupportedDirection(ObservatoryError):
    """Witness is registered one-way only."""


class BadIndex(ObservatoryError):
    """Prefix index outside the admissible range."""


class DegenerateExponents(ObservatoryError):
    """Exponents coincide where they must be pairwise distinct."""


class GridOutsideDomain(ObservatoryError):
    """Monotonicity grid point outside the function's domain."""


class IdentityViolation(ObservatoryError, ArithmeticError):
    """Algebraic identity asserted at runtime did not hold."""


class ArityMismatch(ObservatoryError):
    """Point shape does not match the descriptor's variables."""
