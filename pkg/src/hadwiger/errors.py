"""Exception types shared across the package."""


class ContractViolation(ValueError):
    """An operation was called with arguments outside its precondition."""


class CapacityError(ValueError):
    """Input exceeds a configured size cap."""


class Graph6Error(ValueError):
    """Malformed graph6 input.

    ``offset`` is the byte offset of the offending character (or -1 when the
    problem is not tied to a single byte).
    """

    def __init__(self, message: str, offset: int = -1):
        super().__init__(f"{message} (byte offset {offset})" if offset >= 0 else message)
        self.offset = offset


class SearchBudgetExceeded(RuntimeError):
    """A budgeted search ran out of nodes before reaching a verdict."""

    def __init__(self, budget: int):
        super().__init__(f"search budget of {budget} nodes exhausted")
        self.budget = budget
