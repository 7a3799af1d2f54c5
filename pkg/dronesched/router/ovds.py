"""
Module: ovds.py

This module defines the route serving known requests with drones of varying capacity.
"""

from fastapi import APIRouter

from dronesched.models.common import ErrorMessage
from dronesched.models.inputs import OvdsInput
from dronesched.models.reports import OvdsReport
from dronesched.services.variable_size import CapacityListSource, DroneSource, parse_capacity_source, solve_ovds

router = APIRouter()


@router.post(
    "",
    responses={409: {"model": ErrorMessage}, 422: {"model": ErrorMessage}, 500: {"model": ErrorMessage}},
    response_model=OvdsReport,
)
def ovds(body: OvdsInput) -> OvdsReport:
    """
    Drones are drawn from `capacities` in order, or from `source` ("uniform:lo,hi,seed").
    """
    source: DroneSource = (
        CapacityListSource(body.capacities) if body.capacities else parse_capacity_source(body.source or "")
    )
    return solve_ovds(body.intervals, source, body.epsilon)
