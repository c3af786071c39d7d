"""
Exception hierarchy for the CACD toolkit
"""


class CacdError(Exception):
    """Base class for every error raised by the toolkit."""


class InputFormatError(CacdError, ValueError):
    """Malformed digraph / representation JSON or rational literal."""


class SizeBoundError(CacdError, ValueError):
    """An exhaustive backend was asked to run beyond its desk-scale bound."""

    def __init__(self, what, n, bound):
        super().__init__(f"{what}: n={n} exceeds the supported bound {bound}")
        self.what = what
        self.n = n
        self.bound = bound


class PreconditionError(CacdError, ValueError):
    """An operation was called on input violating its precondition."""

    def __init__(self, step, detail):
        super().__init__(f"{step}: {detail}")
        self.step = step
        self.detail = detail


class NotATournamentError(CacdError, TypeError):
    pass


class NotOrientedError(CacdError, TypeError):
    pass


class ConstructionError(CacdError):
    """The proper-representation pipeline broke one of its postconditions."""


class InsertionError(ConstructionError):
    """
    Full-row insertion produced a matrix without monotone circular ordering.

    `pattern` is the forbidden submatrix located in the offending matrix,
    or None when the diagnostic search found nothing.
    """

    def __init__(self, message, pattern=None):
        if pattern is not None:
            message = f"{message} ({pattern.describe()})"
        super().__init__(message)
        self.pattern = pattern


class LemmaViolation(CacdError):
    """A structural consequence failed on a concrete digraph."""

    def __init__(self, step, detail):
        super().__init__(f"{step}: {detail}")
        self.step = step
        self.detail = detail


class CharacterizationMismatch(CacdError):
    """Two deciders that must agree returned different answers."""


class UnknownCheckError(CacdError, KeyError):
    def __str__(self):
        return f"unknown check {self.args[0]!r}"


class InvalidRepresentationError(CacdError, ValueError):
    """A catch representation breaks p_v in I_v or point distinctness."""
