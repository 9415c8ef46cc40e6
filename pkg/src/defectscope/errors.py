"""Exception hierarchy shared by all defectscope modules."""


class DefectScopeError(Exception):
    """Base class for every error raised by this package."""


class LimitExceeded(DefectScopeError):
    pass


class NotAMember(DefectScopeError):
    pass


class NotASubgroup(DefectScopeError):
    pass


class DivisionByZero(DefectScopeError, ZeroDivisionError):
    pass


class NotIntegral(DefectScopeError):
    pass


class SplitFailure(DefectScopeError):
    """Eigenspaces of the class matrices did not split over the chosen field."""


class SchemaError(DefectScopeError):
    pass


class ValidationError(DefectScopeError):
    """A character table failed one of its invariants.

    ``invariant`` names the failed check and ``indices`` points at the
    offending rows/columns.
    """

    def __init__(self, invariant, indices=(), detail=""):
        self.invariant = invariant
        self.indices = tuple(indices)
        msg = f"{invariant} failed at {self.indices}"
        if detail:
            msg += f": {detail}"
        super().__init__(msg)


class SizeMismatch(DefectScopeError):
    pass


class IntegralityViolation(DefectScopeError):
    pass


class NoDefectClass(DefectScopeError):
    pass


class NoRootFound(DefectScopeError):
    pass


class NonDivisor(DefectScopeError):
    pass


class Mismatch(DefectScopeError):
    pass


class StageError(DefectScopeError):
    """Wraps an upstream failure with the pipeline stage it came from."""

    def __init__(self, stage, cause):
        self.stage = stage
        self.cause = cause
        super().__init__(f"[{stage}] {type(cause).__name__}: {cause}")
