"""Exception types shared across the package."""


class FormatError(ValueError):
    """Malformed DIMACS or m2sat text; carries the offending line number when known."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class GraphFormatError(FormatError):
    pass


class SatFormatError(FormatError):
    pass


class ExhaustiveLimitError(ValueError):
    """An exhaustive routine refused an input larger than its configured limit."""

    def __init__(self, what: str, size: int, limit: int):
        self.size = size
        self.limit = limit
        super().__init__(f"{what}: size {size} exceeds exhaustive limit {limit}")


class PreconditionError(ValueError):
    """Input violates a documented precondition (e.g. a complete graph for the MIS reduction)."""
