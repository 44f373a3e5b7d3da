"""Exception types raised by exactfluct."""


class ExactFluctError(Exception):
    """Base class for all package errors."""


class DomainError(ExactFluctError, ValueError):
    """An argument lies outside the domain of an operation (e.g. N_ex > N)."""


class TableRangeError(ExactFluctError, IndexError):
    """A lookup falls outside the extent of a precomputed table."""


class ConsistencyError(ExactFluctError, ArithmeticError):
    """An exact identity that must hold was violated.

    This never signals bad input; it means an internal computation is wrong.
    """


class UnsupportedStatisticsError(ExactFluctError, ValueError):
    """No closed-form multiplicity is available for the requested statistics."""


class BudgetExceededError(ExactFluctError, RuntimeError):
    """A computation would exceed its configured enumeration or memory budget."""
