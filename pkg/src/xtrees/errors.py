"""Exception hierarchy shared across the package.

InputError covers anything a caller handed us that cannot be worked with
(malformed files, wrong mode, graphs that are not trees where a tree is
required). BudgetError marks an explicit refusal: the input is well-formed but
outside the size range for which exact answers are guaranteed; we refuse
rather than silently approximate.
"""


class InputError(ValueError):
    """Malformed or inapplicable input."""


class NotApplicableError(InputError):
    """The operation's precondition does not hold (e.g. not a tree)."""


class BudgetError(RuntimeError):
    """Input exceeds the supported exact-computation budget; refused."""
