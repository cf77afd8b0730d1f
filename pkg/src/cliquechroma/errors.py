class InputError(ValueError):
    """An argument violates an operation's precondition."""


class ParseError(InputError):
    def __init__(self, message: str, line: int | None = None):
        self.line = line
        super().__init__(f"line {line}: {message}" if line is not None else message)


class BudgetExceeded(RuntimeError):
    """A search or enumeration hit its configured resource budget."""


class NotFoundWithinBudget(RuntimeError):
    """No solution exists up to the requested bound (e.g. palette size)."""
