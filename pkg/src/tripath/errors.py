"""Exception hierarchy shared by every module."""


class TripathError(Exception):
    """Base class for all errors raised by this package."""


class GraphError(TripathError, ValueError):
    """An arc list does not describe a simple digraph."""

    def __init__(self, message, pair=None):
        super().__init__(message)
        self.pair = pair


class LoopArc(GraphError):
    pass


class TwoCycle(GraphError):
    pass


class DuplicateArc(GraphError):
    pass


class VertexOutOfRange(GraphError):
    pass


class ParseError(TripathError, ValueError):
    """Malformed arc-list text."""


class NotFinal(TripathError):
    """A forest was used as if final but fails the finality check."""


class LengthMismatch(TripathError, ValueError):
    """A decomposition was peeled with a path length the caller did not expect."""


class UnsupportedPattern(TripathError, ValueError):
    """The pattern lies outside the cases the certifier mechanizes."""


class InternalConstructionError(TripathError, AssertionError):
    """An assembled path or coloring failed validation; always a bug."""


class LimitExceeded(TripathError):
    """An exact oracle was asked to work beyond its configured size limit."""
