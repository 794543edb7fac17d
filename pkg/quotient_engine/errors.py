"""
Exceptions raised by the finite quotient machinery.
"""


class QuotientEngineError(ValueError):
    """Base class for invalid requests on finite quotients."""


class MissingMarkError(QuotientEngineError):
    """A pair operation was asked of a group or presentation without a mark."""


class InvalidFiniteGroupError(QuotientEngineError):
    """A multiplication table fails the group axioms."""


class BudgetExceededError(RuntimeError):
    """A search outgrew its configured budget; results would be incomplete."""


class CofinalityFailure(RuntimeError):
    """A computed G/G(n) does not map onto every quotient of bounded index."""
