"""Exception types shared by all modules."""


class InputError(ValueError):
    """Malformed or out-of-range input."""


class ParseError(InputError):
    """A text file could not be parsed; carries a 1-based line/column."""

    def __init__(self, message: str, line: int, column: int = 1):
        super().__init__(f"{line}:{column}: {message}")
        self.message = message
        self.line = line
        self.column = column


class ContractViolation(ValueError):
    """An operation was called outside its precondition."""
