"""Exception types shared across the package."""

from __future__ import annotations


class GraphError(ValueError):
    """Invalid graph input or an operation applied outside its domain."""


class ParseError(ValueError):
    def __init__(self, source: str, line: int, expected: str, got: str | None = None):
        self.source = source
        self.line = line
        self.expected = expected
        self.got = got
        msg = f"{source}:{line}: expected {expected}"
        if got is not None:
            msg += f", got {got!r}"
        super().__init__(msg)


class ResourceLimitError(RuntimeError):
    """An exponential routine would exceed its configured size cap.

    ``progress`` carries whatever partial information the search had
    gathered when it stopped.
    """

    def __init__(self, message: str, progress: dict | None = None):
        super().__init__(message)
        self.progress = progress or {}


class VerificationError(ValueError):
    """A certificate condition failed; names the vertex and the condition."""

    def __init__(self, condition: str, vertex: int | None = None, detail: str = ""):
        self.condition = condition
        self.vertex = vertex
        self.detail = detail
        where = f" at vertex {vertex}" if vertex is not None else ""
        msg = f"{condition} failed{where}"
        if detail:
            msg += f": {detail}"
        super().__init__(msg)
