"""Exception types shared across the package."""


class InputError(ValueError):
    """Malformed or out-of-contract input."""


class BudgetError(RuntimeError):
    """A bounded search ran out of budget before reaching an authoritative answer."""


class InternalError(AssertionError):
    """A self-check failed; this always indicates a bug."""
