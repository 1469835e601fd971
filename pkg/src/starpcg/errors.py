"""Exception hierarchy shared by every module."""


class StarPCGError(Exception):
    pass


class ParseError(StarPCGError, ValueError):
    """Malformed graph or witness text. ``where`` names the line or byte."""

    def __init__(self, message, where=None):
        self.where = where
        if where is not None:
            message = f"{where}: {message}"
        super().__init__(message)


class GraphValidationError(StarPCGError, ValueError):
    """Loop, duplicate edge or out-of-range endpoint."""


class WitnessStructureError(StarPCGError, ValueError):
    """Non-positive weight, bad interval, overlapping intervals.

    Distinct from an *invalid* witness, which is well-formed but certifies
    the wrong graph.
    """


class InvalidWitnessError(StarPCGError, ValueError):
    def __init__(self, message, report=None):
        self.report = report
        super().__init__(message)


class ResourceLimitError(StarPCGError, RuntimeError):
    """Search budget exhausted before a definitive answer."""

    def __init__(self, message, nodes_explored=0):
        self.nodes_explored = nodes_explored
        super().__init__(message)


class InternalInvariantError(StarPCGError, AssertionError):
    """A loop invariant of a construction failed; ``state`` holds the witness."""

    def __init__(self, message, state=None):
        self.state = state
        super().__init__(message)
