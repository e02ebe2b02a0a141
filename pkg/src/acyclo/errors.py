"""Shared exception types."""


class BudgetExceededError(RuntimeError):
    """An enumeration would exceed its configured work budget."""

    def __init__(self, bound: int, budget: int, what: str):
        super().__init__(f"{what}: {bound} candidates exceed the budget of {budget}")
        self.bound = bound
        self.budget = budget
        self.what = what


class HypergraphParseError(ValueError):
    """An input document does not describe a valid hypergraph."""
