"""
Result Schema

Error codes, structured errors and the generic ValidationResult shared by
every module, plus the exception type library operations raise.
"""

from enum import Enum
from typing import Generic, List, Literal, Optional, TypeVar

from pydantic import BaseModel, Field


class ErrorCode(str, Enum):
    """
    Standardized error codes.

    These codes allow callers (and the CLI) to handle specific error types
    programmatically.
    """
    # Shape errors
    DIMENSION_MISMATCH = "DIMENSION_MISMATCH"
    POINT_OUT_OF_RANGE = "POINT_OUT_OF_RANGE"
    INVALID_UNIVERSE = "INVALID_UNIVERSE"
    INVALID_PARTITION = "INVALID_PARTITION"
    INVALID_LITERAL = "INVALID_LITERAL"

    # Precondition errors
    NOT_MEMBER = "NOT_MEMBER"
    NOT_REGULAR = "NOT_REGULAR"
    SEMIGROUP_REGULAR = "SEMIGROUP_REGULAR"
    WRONG_CASE = "WRONG_CASE"
    STRATUM_OUT_OF_RANGE = "STRATUM_OUT_OF_RANGE"

    # Resource errors
    MATERIALIZATION_BOUND = "MATERIALIZATION_BOUND"
    VERIFICATION_BOUND = "VERIFICATION_BOUND"

    # General errors
    USAGE_ERROR = "USAGE_ERROR"


class ValidationError(BaseModel):
    """
    A structured error.

    Example - point outside X:
    {
        "message": "Point 5 is outside X = {0,…,2}",
        "code": "POINT_OUT_OF_RANGE",
        "severity": "error",
        "suggestion": "Use 0-based points below n = 3"
    }
    """
    message: str = Field(..., description="Human-readable error message")

    code: ErrorCode = Field(
        ...,
        description="Standardized error code from ErrorCode enum"
    )

    severity: Literal["error", "warning", "info"] = Field(
        default="error",
        description="Severity level of the issue"
    )

    suggestion: Optional[str] = Field(
        default=None,
        description="Actionable suggestion for fixing the error"
    )


T = TypeVar("T")


class ValidationResult(BaseModel, Generic[T]):
    value: Optional[T] = None
    errors: List[ValidationError] = []

    @property
    def ok(self) -> bool:
        return not self.errors

    @classmethod
    def success(cls, value: T) -> "ValidationResult[T]":
        return cls(value=value, errors=[])

    @classmethod
    def failure(cls, value: Optional[T], errors: List[ValidationError]) -> "ValidationResult[T]":
        return cls(value=value, errors=errors)


class SemigroupError(Exception):
    """Raised by library operations; carries one ValidationError."""

    def __init__(self, error: ValidationError):
        super().__init__(error.message)
        self.error = error

    @property
    def code(self) -> ErrorCode:
        return self.error.code

    @classmethod
    def of(cls, code: ErrorCode, message: str, suggestion: Optional[str] = None) -> "SemigroupError":
        return cls(ValidationError(message=message, code=code, suggestion=suggestion))


class NotMemberError(SemigroupError):
    pass


class NotRegularError(SemigroupError):
    pass


class MaterializationError(SemigroupError):
    pass
