"""Exception hierarchy. Every error carries a short machine-readable code used
by the CLI to build JSON error objects."""

from __future__ import annotations


class GarsideError(Exception):
    """Base class for all domain errors raised by this package."""

    code = "error"

    def payload(self) -> dict:
        return {"code": self.code, "message": str(self)}


class UnknownSystemError(GarsideError):
    code = "unknown-system"


class ReducibleSystemError(GarsideError):
    code = "reducible"


class NotSphericalError(GarsideError):
    code = "not-spherical"


class MixedSystemsError(GarsideError):
    code = "mixed-systems"


class NotPositiveError(GarsideError):
    code = "not-positive"


class NotSimpleError(GarsideError):
    code = "not-simple"


class MembershipError(GarsideError):
    code = "not-a-member"


class NoCommutingPairError(GarsideError):
    code = "no-commuting-pair"


class NotNormalizingError(GarsideError):
    code = "not-normalizing"


class NoConjugatorError(GarsideError):
    code = "no-conjugator"


class PreconditionError(GarsideError):
    code = "precondition"


class BudgetExceededError(GarsideError):
    """Raised when an enumeration would exceed the configured budget.

    ``partial`` may hold a partial result, flagged rather than silently
    truncated."""

    code = "budget-exceeded"

    def __init__(self, message: str, partial=None):
        super().__init__(message)
        self.partial = partial
