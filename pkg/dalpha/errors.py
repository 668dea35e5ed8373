"""Exceptions raised by dalpha.

Every error derives from :class:`DalphaError` and from the closest built-in,
so callers may catch either.
"""


class DalphaError(Exception):
    """Base class for all dalpha errors."""


class SelfLoop(DalphaError, ValueError):
    pass


class EdgeExists(DalphaError, ValueError):
    pass


class DisconnectedGraph(DalphaError, ValueError):
    pass


class GraphFormatError(DalphaError, ValueError):
    """Malformed graph6 or edge-list input."""


class AlphaOutOfRange(DalphaError, ValueError):
    pass


class DimensionMismatch(DalphaError, ValueError):
    pass


class NegativeEntry(DalphaError, ValueError):
    pass


class TooSmall(DalphaError, ValueError):
    pass


class TooLarge(DalphaError, ValueError):
    pass


class BadParams(DalphaError, ValueError):
    pass


class EmptyPart(DalphaError, ValueError):
    pass


class EnumerationCapExceeded(BadParams):
    pass


class NotConverged(DalphaError, RuntimeError):
    """Power iteration hit ``max_iter`` before the residual reached ``tol``.

    The best estimate is kept on ``result``.
    """

    def __init__(self, message, result=None):
        super().__init__(message)
        self.result = result


class NoRootInInterval(DalphaError, RuntimeError):
    pass


class ClosedFormMismatch(DalphaError, RuntimeError):
    """A closed form disagrees with its printed polynomial cross-check."""
