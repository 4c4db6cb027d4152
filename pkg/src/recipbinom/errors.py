"""Exception types shared across the package."""


class RecipbinomError(Exception):
    """Base class for library-specific errors."""


class ZeroConstantTerm(RecipbinomError):
    """Reciprocal requested for a series whose constant term is zero."""


class NonzeroConstantTerm(RecipbinomError):
    """Composition requires an inner series with zero constant term."""


class OddPartNonzero(RecipbinomError):
    """A sqrt-variable expansion produced a nonzero odd part."""


class OrderExceeded(RecipbinomError):
    """Coefficient index beyond the truncation order."""


class DomainError(RecipbinomError):
    """Numeric evaluation requested outside the guarded domain."""


class DivergentSeries(RecipbinomError):
    """Requested numeric sum diverges."""
