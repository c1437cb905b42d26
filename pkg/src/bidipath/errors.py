"""Exception types shared across the package."""


class BidipathError(Exception):
    """Base class for all errors raised by this package."""


class LoopRejected(BidipathError):
    """An edge with identical endpoints was supplied; loops are not allowed."""


class UnknownVertex(BidipathError):
    """A vertex id or name does not exist in the host graph."""


class DuplicateVertex(BidipathError):
    """A vertex name was declared twice in an instance file."""


class GraphFrozen(BidipathError):
    """Mutation was attempted on a graph after freeze()."""


class SideConditionViolated(BidipathError):
    """The pair (S, T) does not satisfy X ∩ S = X ∩ T."""


class NotAnXPath(BidipathError):
    """The supplied path is not an X-path of the host graph."""


class NotAlternating(BidipathError):
    """The supplied auxiliary path does not alternate against the base matching."""


class EndpointsNotInX(BidipathError):
    """The supplied auxiliary path does not start and end at X-vertices."""


class InvalidSeed(BidipathError):
    """The supplied edge set is not a matching of the host graph."""


class InvalidK(BidipathError):
    """The requested threshold k is outside the admissible range."""


class InvalidParameter(BidipathError):
    """A generator or CLI parameter is malformed or out of range."""


class LimitExceeded(BidipathError):
    """A brute-force routine hit its instance-size or output-count guard.

    ``count`` reports how many results were produced before the guard fired,
    when that information is meaningful.
    """

    def __init__(self, message: str, count: int | None = None):
        super().__init__(message)
        self.count = count


class ParseError(BidipathError):
    """An instance file is syntactically invalid; carries a 1-based location."""

    def __init__(self, message: str, line: int, column: int):
        super().__init__(f"line {line}, column {column}: {message}")
        self.line = line
        self.column = column


class InternalDualityMismatch(BidipathError):
    """The translated dual certificate failed to match the packing size.

    This is an internal assertion; it firing indicates a bug, never bad input.
    """
