"""
Model module defining delivery intervals, drone colors and instances
"""

from fractions import Fraction

from pydantic import AliasChoices, Field, PositiveInt, computed_field, model_validator

from dronesched.models.common import ExactModel, NonNegativeRational, PositiveRational


class Interval(ExactModel):
    """
    A delivery request: the drone is busy over [left, right] and spends `cost` battery units.

    `arrival` is the time step at which the request becomes known; it must not exceed `left`,
    which is checked by instance validation rather than here so the error can name the request.
    """

    id: str
    arrival: NonNegativeRational
    left: NonNegativeRational = Field(validation_alias=AliasChoices("l", "left"), serialization_alias="l")
    right: NonNegativeRational = Field(validation_alias=AliasChoices("r", "right"), serialization_alias="r")
    cost: PositiveRational

    @model_validator(mode="after")
    def _check_bounds(self) -> "Interval":
        if self.left >= self.right:
            raise ValueError(f"left endpoint {self.left} must be smaller than right endpoint {self.right}")
        return self

    @property
    def length(self) -> Fraction:
        return self.right - self.left

    def overlaps(self, other: "Interval") -> bool:
        """Closed-interval intersection test."""
        return self.left <= other.right and other.left <= self.right


class Color(ExactModel):
    """
    The drone serving a request: (idNumber, binNumber)
    """

    id_number: PositiveInt
    bin_number: PositiveInt

    def as_tuple(self) -> tuple[int, int]:
        return (self.id_number, self.bin_number)


class Instance(ExactModel):
    """
    A request stream with the per-drone battery budget B
    """

    intervals: tuple[Interval, ...] = ()
    budget: PositiveRational
    # set by validate_instance when it separated shared endpoints
    epsilon: PositiveRational | None = None

    @property
    def total_cost(self) -> Fraction:
        return sum((interval.cost for interval in self.intervals), Fraction(0))


class Assignment(ExactModel):
    """
    Color of every request of a run; the drone count is the number of distinct colors
    """

    colors: dict[str, Color] = {}

    @computed_field  # type: ignore[prop-decorator]
    @property
    def drone_count(self) -> int:
        return len({color.as_tuple() for color in self.colors.values()})
