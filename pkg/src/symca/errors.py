"""Exception types shared across the package."""


class SymCAError(ValueError):
    """Base class for input and validation errors."""


class EnumerationTooLarge(SymCAError):
    """Raised when a brute-force enumeration would exceed its guard limit."""

    def __init__(self, count, limit, what="completions"):
        self.count = count
        self.limit = limit
        super().__init__(
            f"enumeration too large: {count} {what} exceeds limit {limit}"
        )


class AnalysisError(SymCAError):
    """Raised when a table cannot be analysed (zero margins, degenerate shape)."""
