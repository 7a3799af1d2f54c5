"""
Model module defining the request bodies of the HTTP service
"""

from fastapi import Query
from pydantic import Field, model_validator

from dronesched.models.common import ExactModel, PositiveRational
from dronesched.models.enums import Strategy
from dronesched.models.intervals import Instance, Interval
from dronesched.models.routes import DeliveryRequest, Route


class ScheduleInput(Instance):
    """
    An instance plus the run options
    """

    strategy: Strategy = Strategy.NEXT_FIT
    epsilon: PositiveRational | None = None

    def instance(self) -> Instance:
        return Instance(intervals=self.intervals, budget=self.budget)


class ImageInput(ExactModel):
    """
    Rendering options of the image endpoints
    """

    dpi: int | None = Query(None, ge=10, le=600)


class OvdsInput(ExactModel):
    """
    Requests plus the drones that will show up: an explicit capacity list or a "uniform:lo,hi,seed" source
    """

    intervals: tuple[Interval, ...] = ()
    capacities: tuple[PositiveRational, ...] = ()
    source: str | None = Field(default=None, pattern=r"^uniform:")
    epsilon: PositiveRational | None = None

    @model_validator(mode="after")
    def _one_source(self) -> "OvdsInput":
        if bool(self.capacities) == bool(self.source):
            raise ValueError("give either capacities or a uniform source")
        return self


class GenerateInput(ExactModel):
    """
    A truck route and the requests received along it, ordered by reception time
    """

    route: Route
    requests: tuple[DeliveryRequest, ...] = ()
    quantum: PositiveRational | None = None
    epsilon: PositiveRational | None = None


class OracleInput(ExactModel):
    """
    Requests and budget to measure; `exact` asks for the branch-and-bound optimum
    """

    intervals: tuple[Interval, ...] = ()
    budget: PositiveRational
    exact: bool = True
