"""Exception types shared across the package."""


class DomainError(ValueError):
    """An argument lies outside the domain of an operation."""


class ShapeError(ValueError):
    """Operands have incompatible dimensions or truncation boxes."""


class BudgetExceeded(RuntimeError):
    """An exhaustive enumeration would exceed the configured budget."""

    def __init__(self, cost, budget, what="enumeration"):
        self.cost = cost
        self.budget = budget
        super().__init__(f"{what} needs {cost} items, budget is {budget}")


class DisagreementError(AssertionError):
    """Two independent computation paths produced different values."""

    def __init__(self, values):
        self.values = dict(values)
        body = "; ".join(f"{k}={v}" for k, v in self.values.items())
        super().__init__(f"computation paths disagree: {body}")
