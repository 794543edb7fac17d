"""
Exceptions raised while building and manipulating finite presentations.
"""


class PresentationError(ValueError):
    """Base class for malformed presentations and words."""


class UnknownGeneratorError(PresentationError):
    """A word references a generator the presentation does not have."""


class UnsupportedWordProblemError(PresentationError):
    """The fiber group is neither free, a closed-surface group nor cyclic."""


class AutomorphismError(PresentationError):
    """Generator images do not define the claimed periodic automorphism."""


class IsomorphismCheckFailure(RuntimeError):
    """A relator image failed to reduce to the identity under an explicit map."""
