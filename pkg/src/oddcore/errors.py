"""Exception hierarchy shared by every oddcore module."""


class OddcoreError(Exception):
    """Base class for all library errors."""


class EdgeListError(OddcoreError, ValueError):
    """Malformed edge-list input; carries the offending 1-based line number."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class GraphError(OddcoreError, ValueError):
    """An argument does not fit the graph it was used against."""


class NotBipartiteError(OddcoreError):
    pass


class TooLargeError(OddcoreError):
    """An exact computation was requested beyond its configured size bound."""


class InternalStructureViolation(OddcoreError, AssertionError):
    """Classification and decomposition disagree. Always a bug, never bad input."""


class UnknownFixtureError(OddcoreError, KeyError):
    pass
