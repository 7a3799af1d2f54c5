"""
Unit test module for the variable-size drone scheduler (offline requests, online drones)
"""

import random
from fractions import Fraction

import pytest
from hypothesis import given, settings

from dronesched.exceptions import CapacitySourceExhausted, DroneCapacityViolation, DuplicateRequest, MalformedRequest
from dronesched.services.oracle import clique_number, ovds_lower_bound
from dronesched.services.variable_size import (
    CapacityListSource,
    UniformCapacitySource,
    check_consecutive_overflow,
    parse_capacity_source,
    partition_by_id,
    schedule_ovds,
    solve_ovds,
)
from dronesched.utils.io import read_intervals
from tests.utils import interval_sets, make_interval, random_intervals


def _one_list(*costs):
    """Pairwise disjoint requests, hence a single idNumber list"""
    return [make_interval(f"d{index}", 2 * index + 1, 2 * index + 2, cost) for index, cost in enumerate(costs)]


def test_disjoint_requests_share_one_list():
    """
    Tests whether disjoint requests land in the same idNumber list
    """
    partition = partition_by_id(_one_list(3, 1, 2))
    assert partition.g == 1
    assert [interval.id for interval in partition.lists[0]] == ["d1", "d2", "d0"]


def test_overlapping_requests_get_their_own_list():
    """
    Tests whether overlapping requests land in different lists
    """
    partition = partition_by_id([make_interval("a", 1, 6, 1), make_interval("b", 2, 7, 1), make_interval("c", 3, 8, 1)])
    assert partition.g == 3
    assert [len(items) for items in partition.lists] == [1, 1, 1]
    assert partition.id_numbers == {"a": 1, "b": 2, "c": 3}


def test_single_drone_takes_both():
    report = schedule_ovds(partition_by_id(_one_list(2, 3)), CapacityListSource([Fraction(5)]))
    assert report.total_drones == 1
    assert report.drones[0].served == ("d0", "d1")
    assert report.drones[0].load == 5


def test_drone_leaves_at_first_item_that_does_not_fit():
    """
    Tests whether a drone stops at the first request it cannot hold
    """
    source = CapacityListSource([Fraction(5), Fraction(4)])
    report = schedule_ovds(partition_by_id(_one_list(2, 3, 4)), source)
    assert report.total_drones == 2
    assert [drone.served for drone in report.drones] == [("d0", "d1"), ("d2",)]
    assert report.alpha == Fraction(5, 4)
    assert report.total_cost == 9
    assert source.drawn == 2
    assert check_consecutive_overflow(report) == []


def test_small_drone_is_a_violation():
    """
    Tests whether a drone smaller than the largest remaining cost raises
    """
    with pytest.raises(DroneCapacityViolation):
        schedule_ovds(partition_by_id(_one_list(2, 3, 4)), CapacityListSource([Fraction(3)]))


def test_finite_source_runs_out():
    """
    Tests whether an exhausted capacity list raises
    """
    with pytest.raises(CapacitySourceExhausted):
        schedule_ovds(partition_by_id(_one_list(2, 3, 4)), CapacityListSource([Fraction(5)]))


def test_empty_instance_needs_no_drone():
    report = schedule_ovds(partition_by_id([]), CapacityListSource([]))
    assert report.total_drones == 0
    assert report.alpha == 1


def test_uniform_source_is_reproducible_and_in_range():
    """
    Tests whether the uniform source is seeded and stays in range
    """
    first = UniformCapacitySource(Fraction(4), Fraction(6), seed=3)
    second = UniformCapacitySource(Fraction(4), Fraction(6), seed=3)
    drawn = [first.request_drone() for _ in range(50)]
    assert drawn == [second.request_drone() for _ in range(50)]
    assert all(4 <= capacity <= 6 for capacity in drawn)


def test_parse_capacity_source(data_dir):
    uniform = parse_capacity_source("uniform:4, 6, 3")
    assert isinstance(uniform, UniformCapacitySource)
    assert (uniform.lo, uniform.hi) == (4, 6)
    listed = parse_capacity_source(f"{data_dir}/capacities.txt")
    assert [listed.request_drone() for _ in range(4)] == [5, 4, 5, 5]


@pytest.mark.parametrize("spec", ["uniform:4", "uniform:6,4", "uniform:a,b", "uniform:0,2"])
def test_parse_capacity_source_rejects(spec):
    """
    Tests whether malformed capacity sources are refused
    """
    with pytest.raises(MalformedRequest):
        parse_capacity_source(spec)


def test_solve_ovds_separates_shared_endpoints(data_dir):
    """
    Tests whether solve_ovds separates shared endpoints before partitioning
    """
    source = parse_capacity_source(f"{data_dir}/capacities.txt")
    report = solve_ovds(read_intervals(f"{data_dir}/shared_endpoints.jsonl"), source)
    assert report.g == 2
    assert report.lists == (("a", "b"), ("c",))
    assert report.total_drones == 2
    assert report.capacities == [5, 4]


def test_solve_ovds_rejects_duplicates():
    with pytest.raises(DuplicateRequest):
        solve_ovds([make_interval("a", 1, 2, 1), make_interval("a", 3, 4, 1)], CapacityListSource([Fraction(5)]))


@settings(max_examples=200, deadline=None)
@given(interval_sets(max_n=12))
def test_fixed_capacity_drones_stay_within_three_times_the_bound(intervals):
    """
    Tests whether equal capacities stay within three times the lower bound
    """
    budget = Fraction(10)
    report = schedule_ovds(partition_by_id(intervals), UniformCapacitySource(budget, budget))
    assert report.g == clique_number(intervals).value
    assert check_consecutive_overflow(report) == []
    if intervals:
        assert report.total_drones <= (2 * report.alpha + 1) * ovds_lower_bound(intervals, [budget])


@settings(max_examples=100, deadline=None)
@given(interval_sets(max_n=10))
def test_lists_hold_disjoint_requests_sorted_by_cost(intervals):
    """
    Tests whether every list holds disjoint requests in cost order
    """
    partition = partition_by_id(intervals)
    for items in partition.lists:
        assert [interval.cost for interval in items] == sorted(interval.cost for interval in items)
        for position, first in enumerate(items):
            assert all(not first.overlaps(second) for second in items[position + 1 :])


@pytest.mark.parametrize("alpha", [1, 2, 5])
def test_varying_capacities_stay_within_the_alpha_bound(alpha):
    """
    Tests whether 200 instances with capacities drawn from [B, alpha * B] stay within (2 alpha + 1) times the
    lower bound, with every drone overflowed by the next request of its list
    """
    budget = Fraction(10)
    rng = random.Random(alpha)
    for seed in range(200):
        intervals = random_intervals(rng, rng.randint(1, 30), budget)
        report = schedule_ovds(partition_by_id(intervals), UniformCapacitySource(budget, alpha * budget, seed))
        assert report.alpha <= alpha
        assert check_consecutive_overflow(report) == [], seed
        assert report.total_drones <= (2 * alpha + 1) * ovds_lower_bound(intervals, report.capacities), seed
