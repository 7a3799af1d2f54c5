"""
Module: schedule.py

This module defines the routes running the online scheduler over a whole request stream.
"""

from fastapi import APIRouter, Depends, Response

from dronesched.models.common import ErrorMessage
from dronesched.models.inputs import ImageInput, ScheduleInput
from dronesched.models.reports import ScheduleReport
from dronesched.services.normalize import validate_instance
from dronesched.services.scheduler import schedule_instance
from dronesched.tools.plot_schedule import render_schedule

router = APIRouter()

_ERRORS = {409: {"model": ErrorMessage}, 422: {"model": ErrorMessage}}


@router.post("", responses=_ERRORS, response_model=ScheduleReport)
def schedule(body: ScheduleInput) -> ScheduleReport:
    """
    Colors every request of the stream with (idNumber, binNumber).

    Shared endpoints are separated by `epsilon` (a quarter of the smallest endpoint gap when omitted).
    """
    _, report = schedule_instance(body.instance(), body.strategy, epsilon=body.epsilon)
    return report


@router.post("/image", responses=_ERRORS, response_model=None)
def schedule_image(body: ScheduleInput, image: ImageInput = Depends()) -> Response:
    """
    Gantt chart of the schedule, one row per drone
    """
    validated = validate_instance(body.instance(), body.epsilon)
    _, report = schedule_instance(validated, body.strategy, epsilon=body.epsilon)
    return Response(render_schedule(report, validated.intervals, image.dpi), media_type="image/png")
