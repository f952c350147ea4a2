"""Exception types raised across the package."""


class NotCoprimeError(ValueError):
    pass


class DomainTooSmallError(ValueError):
    pass


class DivisionByZeroPolyError(ZeroDivisionError):
    pass


class ZeroElementError(ValueError):
    pass


class OrderIncompatibleError(ValueError):
    pass


class NotApplicableError(ValueError):
    pass


class StepBudgetExceeded(RuntimeError):
    def __init__(self, max_steps):
        super().__init__(f"no cycle confirmed within {max_steps} steps")
        self.max_steps = max_steps


class TooManyError(ValueError):
    def __init__(self, cap):
        super().__init__(f"more than {cap} items")
        self.cap = cap
