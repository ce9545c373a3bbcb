"""Typed errors shared across the package.

The CLI maps these onto exit codes: input and format problems exit 1,
capacity bailouts exit 2, and disagreement between provably equivalent
criteria exits 3.
"""


class CmGraphsError(Exception):
    """Base class for all package errors."""


class InputFormatError(CmGraphsError):
    """Malformed graph text, unknown vertex, or an invalid construction."""


class NotInClassError(CmGraphsError):
    """The graph is outside the supported class: its minimum vertex cover
    is not half the vertex count, or it has isolated vertices."""


class StructureError(CmGraphsError):
    """A required combinatorial structure does not exist.

    Raised when no cover-to-independent-set matching can be found; carries
    the deficient set witnessing the failure (Hall's condition).
    """

    def __init__(self, message, hall_set=None, neighborhood=None):
        super().__init__(message)
        self.hall_set = hall_set
        self.neighborhood = neighborhood


class PreconditionError(CmGraphsError):
    """An operation was invoked outside its stated domain; carries the
    violating witness when one exists."""

    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


class CapacityError(CmGraphsError):
    """Exact computation would exceed the configured capacity bound.

    The result is inconclusive; callers must not interpret it as a verdict.
    """


class RouteDisagreementError(CmGraphsError):
    """Two criteria that are proven equivalent returned different values.

    This always indicates an implementation bug, never a property of the
    input; carries a diagnostic dump for reproduction.
    """

    def __init__(self, message, dump=None):
        super().__init__(message)
        self.dump = dump
