

class HypergraphError(Exception):
    """
    Base class of every error raised by hyperwiener. The CLI turns these into a message on
    stderr and exit code 1.

    Attributes
    ----------
    message: str
        Human readable description of the problem
    """

    def __init__(self, message: str):
        super().__init__(message)
        self.message = message


class InvalidHypergraph(HypergraphError):
    """
    Raised when a hypergraph value would break its invariants (edge arity, labels, duplicates).
    """


class ParseError(InvalidHypergraph):
    """
    Raised when hypergraph file content does not follow the file format.

    Attributes
    ----------
    line: int | None
        1-based line number of the offending line, if known
    """

    def __init__(self, message: str, line: int | None = None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line


class VertexOutOfRange(HypergraphError):
    pass


class DuplicateEdge(InvalidHypergraph):
    pass


class MissingEdge(HypergraphError):
    pass


class DisconnectedHypergraph(HypergraphError):
    pass


class NotEdgeMinimal(HypergraphError):
    pass


class NoGoodEdge(HypergraphError):
    """
    No edge leaves at most one non-trivial component. Impossible on edge-minimal input, so
    seeing this means a bug.
    """


class InvalidParameters(HypergraphError):
    pass


class DivisibleOrder(InvalidParameters):
    pass


class NonDivisibleOrder(InvalidParameters):
    pass


class BadOffset(InvalidParameters):
    pass


class BadLinearOrder(InvalidParameters):
    pass


class UniformityTooSmall(InvalidParameters):
    pass


class NonIntegerResult(HypergraphError):
    pass


class DomainError(InvalidParameters):
    pass


class OrderTooLarge(HypergraphError):
    pass


class SearchSpaceTooLarge(HypergraphError):
    """
    A sweep would scan more candidates than allowed.

    Attributes
    ----------
    size: int
        Number of candidates (or ranked edges) the request would need
    limit: int
        The configured limit that was exceeded
    """

    def __init__(self, message: str, size: int, limit: int):
        super().__init__(message)
        self.size = size
        self.limit = limit
