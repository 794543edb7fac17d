"""
Exceptions raised by the Seifert invariant calculus.
"""


class SeifertError(ValueError):
    """Base class for invalid requests on Seifert data."""


class InvalidSeifertDataError(SeifertError):
    """Input violates the normalization rules of the classical invariants."""


class NotPeriodicBundleError(SeifertError):
    """Operation needs a surface bundle with periodic monodromy (s > 0 or e = 0)."""


class ExceptionalManifoldError(SeifertError):
    """Manifold has more than one Seifert fibering over an orientable base."""


class UnitError(SeifertError):
    """Power k is not a unit modulo the monodromy order."""


class SeifertInvariantFailure(RuntimeError):
    """An internal invariant failed; this signals a bug, not bad input."""


class UnrealizableMapError(SeifertError):
    """Cone data of a periodic map cannot close up with zero Euler number."""
