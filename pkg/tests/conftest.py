"""
Shared fixtures: the three-request stream used across the scheduler, oracle and harness tests
"""

from fractions import Fraction

import pytest

from dronesched.models.intervals import Instance, Interval
from tests.utils import line_route, make_interval


@pytest.fixture
def budget() -> Fraction:
    return Fraction(5)


@pytest.fixture
def three_requests() -> list[Interval]:
    """
    I1=[1,5] c3, I2=[2,6] c4, I3=[7,9] c3: with B=5 both strategies need 3 drones
    """
    return [
        make_interval("I1", 1, 5, 3),
        make_interval("I2", 2, 6, 4),
        make_interval("I3", 7, 9, 3),
    ]


@pytest.fixture
def three_instance(three_requests, budget) -> Instance:
    return Instance(intervals=tuple(three_requests), budget=budget)


@pytest.fixture
def line_of_stops():
    """
    Stops at x = 0, 10, 20 visited at t = 0, 10, 20, drones twice as fast as needed
    """
    return line_route(times=[0, 10, 20], xs=[0, 10, 20], speed=2)


@pytest.fixture
def data_dir() -> str:
    return "./tests/fixtures/data"
