"""
Model module defining truck routes, customer requests and generated delivery windows
"""

from pydantic import Field, NonNegativeInt

from dronesched.models.common import ExactModel, NonNegativeRational, PositiveRational, Rational
from dronesched.models.intervals import Interval


class Stop(ExactModel):
    """
    A truck stop in the plane and the time the truck visits it
    """

    x: Rational
    y: Rational
    visit_time: NonNegativeRational = Field(alias="t")


class Route(ExactModel):
    """
    Stops ordered by visit time, plus the (fixed) drone speed in distance units per time unit
    """

    drone_speed: PositiveRational
    stops: tuple[Stop, ...]


class DeliveryRequest(ExactModel):
    """
    A customer location received while the truck is at time `received_at` on its route
    """

    x: Rational
    y: Rational
    received_at: NonNegativeRational
    id: str | None = None


class GeneratedInterval(ExactModel):
    """
    Best valid (takeoff, landing) stop pair for one request; indices are 0-based positions in `Route.stops`
    """

    takeoff_index: NonNegativeInt
    landing_index: NonNegativeInt
    left: NonNegativeRational
    right: NonNegativeRational
    cost: PositiveRational


class RejectedRequest(ExactModel):
    """
    A request the generator could not turn into an interval
    """

    index: NonNegativeInt
    id: str
    reason: str


class GenerationBatch(ExactModel):
    """
    Output of a streamed generation: schedulable intervals and the rejected requests
    """

    intervals: tuple[Interval, ...] = ()
    rejected: tuple[RejectedRequest, ...] = ()
