"""Exception hierarchy shared by every module."""


class RamseyCertError(Exception):
    """Base class for all errors raised by this package."""


class InvalidInputError(RamseyCertError, ValueError):
    """An argument violates an operation's precondition."""


class SizeLimitError(InvalidInputError):
    """An input is too large (or too small) for the requested operation."""


class DegreeConditionError(InvalidInputError):
    """A graph handed to the Dirac construction is below the degree threshold."""


class BudgetExceededError(RamseyCertError):
    """An exhaustive search would exceed its configured budget."""


class RangeError(RamseyCertError):
    """A search range did not bracket the requested quantity."""


class ContractViolation(RamseyCertError, AssertionError):
    """An internal invariant guaranteed by the underlying mathematics failed.

    Seeing one of these always means a bug, never a legitimate input state.
    """


class Graph6Error(InvalidInputError):
    """Malformed graph6 text. ``offset`` is the byte position of the problem."""

    def __init__(self, message: str, offset: int) -> None:
        super().__init__(f"{message} (at byte {offset})")
        self.offset = offset
