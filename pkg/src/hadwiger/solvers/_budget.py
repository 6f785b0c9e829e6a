from __future__ import annotations

from ..errors import SearchBudgetExceeded


class NodeBudget:
    """Counts search nodes; raises once ``limit`` is passed (``None`` = unlimited)."""

    __slots__ = ("limit", "used")

    def __init__(self, limit: int | None = None):
        if limit is not None and limit <= 0:
            raise ValueError("budget must be positive")
        self.limit = limit
        self.used = 0

    def tick(self) -> None:
        self.used += 1
        if self.limit is not None and self.used > self.limit:
            raise SearchBudgetExceeded(self.limit)


def as_budget(budget: int | NodeBudget | None) -> NodeBudget:
    return budget if isinstance(budget, NodeBudget) else NodeBudget(budget)
