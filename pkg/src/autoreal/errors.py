"""Shared exception types.

The CLI maps these onto exit codes: a NotRealizableError is a well-formed
negative answer (exit 1), a BudgetExceededError is a refused computation
(exit 3), and plain ValueError covers malformed input (exit 2).
"""


class NotRealizableError(Exception):
    """The object exists but admits no witness of the requested kind."""


class BudgetExceededError(RuntimeError):
    """An exhaustive search was refused because its estimated cost is too
    high; the message says how to raise the limit."""
