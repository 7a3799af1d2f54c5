"""
Model module defining the exact-rational field types and the shared base model
"""

from fractions import Fraction
from typing import Annotated

from pydantic import AfterValidator, BaseModel, ConfigDict, PlainSerializer, PlainValidator, WithJsonSchema

from dronesched.utils.rational import format_rational, parse_rational

_RATIONAL_SCHEMA = WithJsonSchema(
    {"type": "string", "pattern": r"^-?\d+(/\d+|\.\d+)?$", "examples": ["3", "7/2", "1.25"]}
)


def _positive(value: Fraction) -> Fraction:
    if value <= 0:
        raise ValueError("must be positive")
    return value


def _non_negative(value: Fraction) -> Fraction:
    if value < 0:
        raise ValueError("must be non-negative")
    return value


Rational = Annotated[
    Fraction,
    PlainValidator(parse_rational),
    PlainSerializer(format_rational, return_type=str),
    _RATIONAL_SCHEMA,
]
PositiveRational = Annotated[Rational, AfterValidator(_positive)]
NonNegativeRational = Annotated[Rational, AfterValidator(_non_negative)]


class ExactModel(BaseModel):
    """
    Base for every domain model: immutable, exact-rational aware, accepts field names or wire aliases
    """

    model_config = ConfigDict(
        arbitrary_types_allowed=True,
        frozen=True,
        populate_by_name=True,
        extra="forbid",
    )


class ErrorMessage(BaseModel):
    """
    Model of an error message
    """

    message: str
    code: str
    details: object | None = None
