"""
Utils module for unit tests: request builders and brute-force reference implementations
"""

import itertools
import json
import random
from collections.abc import Sequence
from fractions import Fraction

from hypothesis import strategies as st

from dronesched.models.intervals import Assignment, Interval
from dronesched.models.routes import DeliveryRequest, Route, Stop


def load_content(file_path: str, encoded: bool = True):
    """
    Loads content from a file
    """
    with open(file_path) as file:
        if encoded:
            return file.read().encode("utf-8")
        return file.read()


def load_json_file(filepath: str):
    """
    Loads a JSON file from the specified path and returns the parsed data.
    """
    with open(filepath, "r") as f:
        return json.load(f)


def make_interval(request_id: str, left, right, cost, arrival=None) -> Interval:
    """
    Builds an interval from ints or strings; the arrival defaults to the left endpoint
    """
    left, right, cost = Fraction(left), Fraction(right), Fraction(cost)
    return Interval(
        id=request_id,
        arrival=left if arrival is None else Fraction(arrival),
        left=left,
        right=right,
        cost=cost,
    )


def random_intervals(rng: random.Random, n: int, budget: Fraction = Fraction(10), span: int = 3) -> list[Interval]:
    """
    n intervals with pairwise distinct integer endpoints; costs uniform on the tenths of (0, budget]
    """
    points = rng.sample(range(1, 2 * n * span + 1), 2 * n)
    intervals = []
    for index in range(n):
        left, right = sorted(points[2 * index : 2 * index + 2])
        cost = budget * Fraction(rng.randint(1, 10), 10)
        intervals.append(make_interval(f"i{index + 1}", left, right, cost))
    return intervals


@st.composite
def interval_sets(draw, max_n: int = 10, budget: int = 10, min_n: int = 0):
    """
    Hypothesis strategy: distinct integer endpoints, integer costs in [1, budget], arrival = left
    """
    n = draw(st.integers(min_value=min_n, max_value=max_n))
    points = draw(st.permutations(list(range(1, 2 * n + 1))))
    costs = draw(st.lists(st.integers(min_value=1, max_value=budget), min_size=n, max_size=n))
    intervals = []
    for index in range(n):
        left, right = sorted(points[2 * index : 2 * index + 2])
        intervals.append(make_interval(f"i{index + 1}", left, right, costs[index]))
    return intervals


def brute_force_clique(intervals: Sequence[Interval]) -> int:
    """
    Largest subset of pairwise overlapping intervals, by enumerating every subset
    """
    best = 0
    for size in range(1, len(intervals) + 1):
        for subset in itertools.combinations(intervals, size):
            if all(a.overlaps(b) for a, b in itertools.combinations(subset, 2)):
                best = size
                break
    return best


def naive_first_fit(costs: Sequence[Fraction], budget: Fraction) -> list[int]:
    """
    First-fit by scanning every bin ever opened, in order
    """
    remaining: list[Fraction] = []
    placed = []
    for cost in costs:
        for index, rem in enumerate(remaining):
            if rem >= cost:
                remaining[index] -= cost
                placed.append(index + 1)
                break
        else:
            remaining.append(budget - cost)
            placed.append(len(remaining))
    return placed


def assert_valid_assignment(assignment: Assignment, intervals: Sequence[Interval], budget: Fraction) -> None:
    """
    Overlapping requests never share an idNumber, and every drone stays within the budget
    """
    by_id = {interval.id: interval for interval in intervals}
    assert set(assignment.colors) == set(by_id)
    for a, b in itertools.combinations(intervals, 2):
        if a.overlaps(b):
            assert assignment.colors[a.id].id_number != assignment.colors[b.id].id_number, (a.id, b.id)
    loads: dict[tuple[int, int], Fraction] = {}
    for request_id, color in assignment.colors.items():
        loads[color.as_tuple()] = loads.get(color.as_tuple(), Fraction(0)) + by_id[request_id].cost
    assert all(load <= budget for load in loads.values()), loads


def line_route(times: Sequence[int], xs: Sequence[int], speed) -> Route:
    """
    Stops along the x axis
    """
    return Route(
        drone_speed=Fraction(speed),
        stops=tuple(Stop(x=Fraction(x), y=Fraction(0), visit_time=Fraction(t)) for x, t in zip(xs, times)),
    )


def request(x, y, received_at=0, request_id: str | None = None) -> DeliveryRequest:
    return DeliveryRequest(x=Fraction(x), y=Fraction(y), received_at=Fraction(received_at), id=request_id)
