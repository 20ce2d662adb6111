"""Exception hierarchy.

Every error carries a stable ``code`` string so the CLI can report machine
readable diagnostics and map failures onto exit codes.
"""


class SpinsymError(Exception):
    """Base class for all library errors."""

    code = "ERROR"


class InvalidRankError(SpinsymError):
    code = "INVALID_RANK"


class DimensionMismatchError(SpinsymError):
    code = "DIMENSION_MISMATCH"


class NotARootError(SpinsymError):
    code = "NOT_A_ROOT"


class NotDominantError(SpinsymError):
    code = "NOT_DOMINANT"


class NotIntegralError(SpinsymError):
    code = "NOT_INTEGRAL"


class CapExceededError(SpinsymError):
    code = "CAP_EXCEEDED"


class InvalidSubsystemError(SpinsymError):
    code = "INVALID_SUBSYSTEM"


class NotClosedError(SpinsymError):
    code = "NOT_CLOSED"


class NotGradedError(SpinsymError):
    code = "NOT_GRADED"


class NotSimpleListError(SpinsymError):
    code = "NOT_SIMPLE_LIST"


class NoNoncompactError(SpinsymError):
    code = "NO_NONCOMPACT"


class NotSpinError(SpinsymError):
    code = "NOT_SPIN"


class InconsistentCharacterError(SpinsymError):
    code = "INCONSISTENT_CHARACTER"
