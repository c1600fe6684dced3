"""Exception taxonomy shared across the package.

The CLI maps these onto distinct exit codes, so the split matters:
malformed input is a different failure than a well-formed input lying
outside an operation's domain, and both differ from an exhausted search
budget.
"""


class ValidationError(ValueError):
    """Malformed input: wrong length, entry out of range, unparseable text."""


class DomainError(ValueError):
    """Well-formed input outside an operation's domain.

    Examples: asking for the displacement of a vector that is not a
    parking function, or mapping a non-ideal tower state.
    """


class IllegalMoveError(DomainError):
    """A move that breaks the stacking rules in a given state."""


class BudgetExceededError(RuntimeError):
    """An exhaustive search or scan would exceed the configured budget."""
