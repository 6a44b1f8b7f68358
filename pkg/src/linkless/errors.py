"""Exception types shared across the package."""


class GraphInputError(ValueError):
    """An argument violates an operation's precondition."""


class ParseError(GraphInputError):
    """Malformed graph text. ``offset`` is the byte (graph6) or line (edge list) at fault."""

    def __init__(self, message, offset=None):
        super().__init__(message if offset is None else f"{message} (at offset {offset})")
        self.offset = offset


class ResourceLimitError(RuntimeError):
    """A configured size cap was exceeded before an exact search started."""
