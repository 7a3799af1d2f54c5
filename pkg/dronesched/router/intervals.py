"""
Module: intervals.py

This module defines the route turning customer requests along a truck route into delivery intervals.
"""

from fastapi import APIRouter

from dronesched.models.common import ErrorMessage
from dronesched.models.inputs import GenerateInput
from dronesched.models.routes import GenerationBatch
from dronesched.services.interval_generator import stream_generate

router = APIRouter()


@router.post(
    "/generate",
    responses={409: {"model": ErrorMessage}, 422: {"model": ErrorMessage}},
    response_model=GenerationBatch,
)
def generate(body: GenerateInput) -> GenerationBatch:
    """
    Cheapest valid takeoff/landing stops of every request; unservable requests are listed in `rejected`.
    """
    return stream_generate(body.route, body.requests, body.quantum, body.epsilon)
