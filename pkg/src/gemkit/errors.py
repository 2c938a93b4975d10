"""Exception types shared by all gemkit modules."""


class GemError(Exception):
    """Base class for every error raised by this package."""


class GemParseError(GemError):
    """Malformed gem file (syntax or header problems)."""

    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class InvalidGraphError(GemError):
    """Edge data violating the colored-graph invariants (loops, degree defects)."""

    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class DisconnectedGraphError(GemError):
    """Operation requires a connected graph."""


class DimensionError(GemError):
    """Operation requires a specific graph dimension."""


class PreconditionError(GemError):
    """A documented operation precondition does not hold."""


class StructureError(GemError):
    """The input cannot be the gem of a manifold (e.g. negative genus)."""


class MoveError(GemError):
    """Invalid move parameters, or a move pipeline cannot proceed."""
