"""Parsing and formatting of exact rational quantities (times, costs, capacities)."""

from decimal import Decimal
from fractions import Fraction
from typing import Any


def parse_rational(value: Any) -> Fraction:
    """
    Converts a wire value to an exact Fraction.

    Accepts Fractions, ints, Decimals and strings such as "7", "3/4" or "1.25".
    Floats are rejected: they cannot carry the exact endpoint comparisons the scheduler relies on.

    Raises:
        ValueError: if the value is not an exact rational number
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise ValueError(f"not a rational number: {value!r}")
    if isinstance(value, (int, Decimal)):
        return Fraction(value)
    if isinstance(value, float):
        raise ValueError(f"floats are not accepted for exact quantities, write {value!r} as a \"num/den\" string")
    if isinstance(value, str):
        try:
            return Fraction(value.strip())
        except (ValueError, ZeroDivisionError) as exc:
            raise ValueError(f"not a rational number: {value!r}") from exc
    raise ValueError(f"not a rational number: {value!r}")


def format_rational(value: Fraction) -> str:
    """Canonical "num/den" form, or just "num" for integers."""
    return str(value)


def to_decimal(value: Fraction) -> Decimal:
    """Decimal approximation in the current decimal context."""
    return Decimal(value.numerator) / Decimal(value.denominator)
