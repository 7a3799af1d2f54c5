"""
Unit test module for exact rational parsing
"""

from decimal import Decimal
from fractions import Fraction

import pytest

from dronesched.utils.rational import format_rational, parse_rational


@pytest.mark.parametrize(
    "value, expected",
    [
        ("7", Fraction(7)),
        ("3/4", Fraction(3, 4)),
        ("1.25", Fraction(5, 4)),
        (" 2/6 ", Fraction(1, 3)),
        (12, Fraction(12)),
        (Decimal("0.001"), Fraction(1, 1000)),
        (Fraction(9, 2), Fraction(9, 2)),
    ],
)
def test_parse_rational_accepts_exact_values(value, expected):
    """
    Tests whether integers, fractions and exact strings parse
    """
    assert parse_rational(value) == expected


@pytest.mark.parametrize("value", [0.5, True, "abc", "1/0", None, [1]])
def test_parse_rational_rejects_inexact_or_garbage(value):
    """
    Tests whether floats and garbage are refused
    """
    with pytest.raises(ValueError):
        parse_rational(value)


def test_format_rational_is_canonical():
    assert format_rational(Fraction(6, 4)) == "3/2"
    assert format_rational(Fraction(8, 4)) == "2"
