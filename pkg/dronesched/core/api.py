import dataclasses
from enum import auto
from http import HTTPStatus
from typing import Any

from pydantic import BaseModel

from dronesched.core.enum import UpperStrEnum


class SchedulingErrorCode(UpperStrEnum):
    """Scheduling error codes."""

    GENERIC_ERROR = auto()
    MALFORMED_REQUEST = auto()
    INFEASIBLE_REQUEST = auto()
    EPSILON_TOO_LARGE = auto()
    DUPLICATE_REQUEST = auto()
    OUT_OF_ORDER = auto()
    ENDPOINT_COLLISION = auto()
    ID_NOT_IN_USE = auto()
    STRATEGY_MISMATCH = auto()
    MISSED_EVENT = auto()
    NO_FEASIBLE_DELIVERY = auto()
    INVALID_STOP_ORDER = auto()
    DRONE_CAPACITY_VIOLATION = auto()
    CAPACITY_SOURCE_EXHAUSTED = auto()
    INSTANCE_TOO_LARGE = auto()
    HORIZON_TOO_SMALL = auto()


@dataclasses.dataclass(kw_only=True)
class SchedulingError(Exception):
    """Scheduling error."""

    message: str
    error_code: SchedulingErrorCode = SchedulingErrorCode.GENERIC_ERROR
    http_status_code: HTTPStatus | int = HTTPStatus.BAD_REQUEST
    details: Any = None

    def __repr__(self) -> str:
        """Return the repr of the error."""
        return (
            f"{self.__class__.__name__}("
            f"message={self.message!r}, "
            f"error_code={self.error_code}, "
            f"http_status_code={self.http_status_code}, "
            f"details={self.details!r})"
        )

    def __str__(self) -> str:
        """Return the str representation."""
        return f"{self.error_code.value}: {self.message}"


class ErrorResponse(BaseModel, use_enum_values=True):
    """ErrorResponse."""

    code: SchedulingErrorCode
    message: str
    details: Any = None
