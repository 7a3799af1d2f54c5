"""
Unit test module for the doubling benchmark table
"""

import math
from fractions import Fraction

import pytest

from dronesched.exceptions import MalformedRequest
from dronesched.models.enums import Strategy
from dronesched.services.benchmark import BENCH_COLUMNS, bench_doubling


def test_single_size_gives_single_row():
    frame = bench_doubling([16], Strategy.NEXT_FIT, seeds=1)
    assert list(frame.columns) == BENCH_COLUMNS
    assert len(frame) == 1
    assert frame.loc[0, "strategy"] == "next-fit"
    assert math.isnan(frame.loc[0, "growth"])
    assert frame.loc[0, "per_update_ns"] > 0


def test_growth_is_relative_to_previous_size():
    """
    Tests whether growth is the ratio to the previous size
    """
    frame = bench_doubling([8, 16, 32], Strategy.FIRST_FIT, seeds=1, budget=Fraction(2))
    assert frame["n"].tolist() == [8, 16, 32]
    for row in range(1, 3):
        expected = frame.loc[row, "per_update_ns"] / frame.loc[row - 1, "per_update_ns"]
        assert frame.loc[row, "growth"] == pytest.approx(expected)
    assert (frame["ovds_per_nlogn"] > 0).all()


@pytest.mark.parametrize("sizes", [[16, 8], [8, 8], [1, 4]])
def test_sizes_must_double_upward(sizes):
    """
    Tests whether decreasing or tiny sizes are refused
    """
    with pytest.raises(MalformedRequest):
        bench_doubling(sizes, Strategy.NEXT_FIT, seeds=1)
