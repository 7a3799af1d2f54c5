"""
Module: exceptions.py

This module defines the concrete scheduling errors raised by the services
"""

from http import HTTPStatus
from typing import Any

from sentry_sdk import capture_exception

from dronesched.core.api import SchedulingError, SchedulingErrorCode


class SentryReportedError(SchedulingError):
    """Base class for internal logic errors that should be reported to Sentry."""

    def __init__(self, message: str, error_code: SchedulingErrorCode, details: Any = None) -> None:
        super().__init__(
            message=message,
            error_code=error_code,
            http_status_code=HTTPStatus.INTERNAL_SERVER_ERROR,
            details=details,
        )
        capture_exception(self)


# Requests


class MalformedRequest(SchedulingError):
    """Raised when a request record is structurally wrong (bad fields, arrival after its left endpoint, ...)."""

    def __init__(self, message: str, details: Any = None):
        super().__init__(
            message=message,
            error_code=SchedulingErrorCode.MALFORMED_REQUEST,
            http_status_code=HTTPStatus.UNPROCESSABLE_ENTITY,
            details=details,
        )


class InfeasibleRequest(SchedulingError):
    """Raised when a request costs more than any drone can carry."""

    def __init__(self, request_id: str, cost: Any, budget: Any):
        super().__init__(
            message=f"Request {request_id!r} costs {cost}, more than the budget {budget}",
            error_code=SchedulingErrorCode.INFEASIBLE_REQUEST,
            http_status_code=HTTPStatus.UNPROCESSABLE_ENTITY,
            details={"id": request_id, "cost": str(cost), "budget": str(budget)},
        )


class EpsilonTooLarge(SchedulingError):
    """Raised when the endpoint perturbation would invert an interval or reorder endpoints."""

    def __init__(self, epsilon: Any, limit: Any):
        super().__init__(
            message=f"Epsilon {epsilon} must be smaller than {limit}",
            error_code=SchedulingErrorCode.EPSILON_TOO_LARGE,
            http_status_code=HTTPStatus.UNPROCESSABLE_ENTITY,
            details={"epsilon": str(epsilon), "limit": str(limit)},
        )


class DuplicateRequest(SchedulingError):
    """Raised when a request id was already submitted."""

    def __init__(self, request_id: str):
        super().__init__(
            message=f"Request {request_id!r} was already submitted",
            error_code=SchedulingErrorCode.DUPLICATE_REQUEST,
            http_status_code=HTTPStatus.CONFLICT,
            details={"id": request_id},
        )


class OutOfOrder(SchedulingError):
    """Raised when a submission or a tick goes back in time, or two requests share a time step."""

    def __init__(self, message: str, details: Any = None):
        super().__init__(
            message=message,
            error_code=SchedulingErrorCode.OUT_OF_ORDER,
            http_status_code=HTTPStatus.CONFLICT,
            details=details,
        )


class EndpointCollision(SchedulingError):
    """Raised when a submitted interval reuses an endpoint value already seen by the scheduler."""

    def __init__(self, request_id: str, value: Any):
        super().__init__(
            message=f"Request {request_id!r} has endpoint {value} already used by another request",
            error_code=SchedulingErrorCode.ENDPOINT_COLLISION,
            http_status_code=HTTPStatus.CONFLICT,
            details={"id": request_id, "value": str(value)},
        )


class StrategyMismatch(SchedulingError):
    """Raised when a run tries to switch packing strategy midway."""

    def __init__(self, expected: Any, got: Any):
        super().__init__(
            message=f"Scheduler was built for {expected}, cannot run {got}",
            error_code=SchedulingErrorCode.STRATEGY_MISMATCH,
            details={"expected": str(expected), "got": str(got)},
        )


# Internal state


class IdNotInUse(SentryReportedError):
    """Raised on a double release or the release of an id that was never handed out."""

    def __init__(self, id_number: int):
        super().__init__(
            message=f"idNumber {id_number} is not in use",
            error_code=SchedulingErrorCode.ID_NOT_IN_USE,
            details={"id_number": id_number},
        )


class MissedEvent(SentryReportedError):
    """Raised when a tick skips past a pending endpoint."""

    def __init__(self, request_id: str, value: Any, tick: Any):
        super().__init__(
            message=f"Endpoint {value} of request {request_id!r} was skipped by tick {tick}",
            error_code=SchedulingErrorCode.MISSED_EVENT,
            details={"id": request_id, "value": str(value), "tick": str(tick)},
        )


# Interval generation


class NoFeasibleDelivery(SchedulingError):
    """Raised when no takeoff/landing stop pair can serve a request in time."""

    def __init__(self, message: str, details: Any = None):
        super().__init__(
            message=message,
            error_code=SchedulingErrorCode.NO_FEASIBLE_DELIVERY,
            http_status_code=HTTPStatus.UNPROCESSABLE_ENTITY,
            details=details,
        )


class InvalidStopOrder(SchedulingError):
    """Raised when a route has fewer than two stops or its visit times do not strictly increase."""

    def __init__(self, message: str):
        super().__init__(
            message=message,
            error_code=SchedulingErrorCode.INVALID_STOP_ORDER,
            http_status_code=HTTPStatus.UNPROCESSABLE_ENTITY,
        )


# Variable-size drones


class DroneCapacityViolation(SchedulingError):
    """Raised when a drone source hands out a drone too small for the requests it must serve."""

    def __init__(self, capacity: Any, required: Any):
        super().__init__(
            message=f"Drone capacity {capacity} is below the largest pending cost {required}",
            error_code=SchedulingErrorCode.DRONE_CAPACITY_VIOLATION,
            details={"capacity": str(capacity), "required": str(required)},
        )


class CapacitySourceExhausted(SchedulingError):
    """Raised when a finite capacity list runs out before every request is served."""

    def __init__(self, drawn: int):
        super().__init__(
            message=f"Capacity source exhausted after {drawn} drones",
            error_code=SchedulingErrorCode.CAPACITY_SOURCE_EXHAUSTED,
            details={"drawn": drawn},
        )


# Oracle and harness


class InstanceTooLarge(SchedulingError):
    """Raised when the exhaustive oracle is asked to solve an instance above its size limit."""

    def __init__(self, size: int, limit: int):
        super().__init__(
            message=f"Exhaustive search is limited to {limit} intervals, got {size}",
            error_code=SchedulingErrorCode.INSTANCE_TOO_LARGE,
            http_status_code=HTTPStatus.REQUEST_ENTITY_TOO_LARGE,
            details={"size": size, "limit": limit},
        )


class HorizonTooSmall(SchedulingError):
    """Raised when an instance generator cannot place the requested intervals."""

    def __init__(self, message: str):
        super().__init__(
            message=message,
            error_code=SchedulingErrorCode.HORIZON_TOO_SMALL,
            http_status_code=HTTPStatus.UNPROCESSABLE_ENTITY,
        )
