"""Exceptions shared across the package."""


class HypothesisViolation(ValueError):
    """An operation was invoked outside the hypotheses under which its
    result is defined (wrong parameter range, empty diagonal, etc.)."""


class BudgetExceeded(RuntimeError):
    """An exhaustive enumeration would exceed the configured budget.

    Raised instead of silently falling back to sampling; callers that
    want a sampled answer must ask for one explicitly.
    """
