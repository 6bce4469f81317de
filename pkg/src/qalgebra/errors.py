"""Exception types shared across the package."""


class DomainError(ValueError):
    """Input outside the domain of an operation (range, admissibility, preconditions)."""


class GuardError(RuntimeError):
    """An internal iteration cap was exceeded; indicates a bug, never a valid result."""


class ParseError(ValueError):
    def __init__(self, message: str, position: int):
        super().__init__(f"{message} at position {position}")
        self.position = position
