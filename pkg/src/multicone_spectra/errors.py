"""Exception types shared across the package."""


class SpectraError(Exception):
    """Base class for domain errors (mapped to exit status 1 by the CLI)."""


class CapacityError(SpectraError):
    """A graph or search exceeds the configured vertex capacity."""


class PreconditionError(SpectraError):
    """An operation was called with inputs outside its contract."""


class ExpressionSyntaxError(SpectraError):
    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


class Graph6Error(SpectraError):
    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (at offset {offset})")
        self.offset = offset
