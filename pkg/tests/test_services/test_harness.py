"""
Unit test module for random instances and strategy comparisons
"""

from fractions import Fraction

import pytest

from dronesched.exceptions import HorizonTooSmall, MalformedRequest
from dronesched.models.intervals import Instance
from dronesched.models.reports import GenSpec
from dronesched.services.harness import (
    COMPARE_COLUMNS,
    adversarial_instance,
    compare_random,
    compare_strategies,
    generate_instance,
)
from dronesched.services.oracle import clique_number
from dronesched.utils.io import write_jsonl
from tests.utils import load_content, make_interval


def _spec(**overrides) -> GenSpec:
    fields = {
        "n": 30,
        "horizon": Fraction(100),
        "min_len": Fraction(1),
        "max_len": Fraction(10),
        "budget": Fraction(1),
        "seed": 4,
    }
    fields.update(overrides)
    return GenSpec(**fields)


def test_empty_instance():
    """
    Tests whether n = 0 gives an empty instance
    """
    assert generate_instance(_spec(n=0)).intervals == ()


def test_single_request_fits_the_horizon():
    (interval,) = generate_instance(_spec(n=1)).intervals
    assert 0 <= interval.left < interval.right <= 100
    assert 1 <= interval.length <= 10
    assert 0 < interval.cost <= 1


def test_generated_requests_are_ready_to_schedule():
    """
    Tests whether generated requests have distinct endpoints, costs within budget and arrival order
    """
    instance = generate_instance(_spec())
    intervals = instance.intervals
    assert len(intervals) == 30
    assert len({interval.id for interval in intervals}) == 30
    values = [value for interval in intervals for value in (interval.left, interval.right)]
    assert len(set(values)) == len(values)
    assert all(interval.arrival == interval.left for interval in intervals)
    assert [interval.arrival for interval in intervals] == sorted(interval.arrival for interval in intervals)
    assert all(interval.cost <= instance.budget for interval in intervals)


def test_same_seed_same_file(tmp_path):
    """
    Tests whether the same seed writes the same file and another seed does not
    """
    for name in ("first.jsonl", "second.jsonl"):
        write_jsonl(tmp_path / name, generate_instance(_spec()).intervals)
    assert load_content(tmp_path / "first.jsonl") == load_content(tmp_path / "second.jsonl")
    write_jsonl(tmp_path / "other.jsonl", generate_instance(_spec(seed=5)).intervals)
    assert load_content(tmp_path / "other.jsonl") != load_content(tmp_path / "first.jsonl")


def test_overlap_cap():
    """
    Tests whether no point is covered by more requests than the overlap cap
    """
    instance = generate_instance(_spec(n=20, max_len=Fraction(5), max_overlap=2))
    assert clique_number(instance.intervals).value <= 2


@pytest.mark.parametrize(
    "overrides",
    [
        {"max_len": Fraction(200)},
        {"n": 3, "horizon": Fraction(1), "min_len": Fraction(1, 2), "max_len": Fraction(1, 2), "grid": 2},
        {"n": 3, "horizon": Fraction(10), "min_len": Fraction(9), "max_len": Fraction(9), "max_overlap": 1},
    ],
)
def test_impossible_requests(overrides):
    """
    Tests whether horizons too small for the requests are refused
    """
    with pytest.raises(HorizonTooSmall):
        generate_instance(_spec(**overrides))


def test_min_len_above_max_len():
    with pytest.raises(MalformedRequest):
        generate_instance(_spec(min_len=Fraction(20)))


def test_adversarial_instances():
    """
    Tests whether adversarial instances overlap as much as their width allows
    """
    everything = adversarial_instance(6, Fraction(1))
    assert clique_number(everything.intervals).value == 6
    assert [interval.id for interval in everything.intervals] == [f"a{i}" for i in range(1, 7)]
    banded = adversarial_instance(20, Fraction(1), width=2)
    assert clique_number(banded.intervals).value == 3


def test_compare_three_requests(three_instance):
    """
    Tests whether the comparison reports both strategies against the exact optimum
    """
    comparison = compare_strategies(three_instance)
    for metrics in (comparison.next_fit, comparison.first_fit):
        assert (metrics.drone_count, metrics.oracle_value, metrics.oracle_exact) == (3, 3, True)
        assert metrics.ratio == 1.0
        assert metrics.g_id_number == 2
        assert metrics.latency_ns is None


def test_compare_disjoint_chain():
    chain = Instance(
        intervals=tuple(make_interval(f"c{k}", 2 * k, 2 * k + 1, Fraction(1, 100)) for k in range(6)),
        budget=Fraction(1),
    )
    comparison = compare_strategies(chain)
    assert (comparison.next_fit.drone_count, comparison.first_fit.drone_count) == (1, 1)


def test_timed_comparison_reports_latencies(three_instance):
    comparison = compare_strategies(three_instance, timed=True)
    assert set(comparison.first_fit.latency_ns) == {"mean", "p50", "p90", "p99"}


def test_compare_random_table():
    """
    Tests whether the random comparison table has a row per instance and strategy
    """
    frame = compare_random(_spec(n=8, seed=10), instances=5)
    assert list(frame.columns) == COMPARE_COLUMNS
    assert frame["seed"].tolist() == [10, 11, 12, 13, 14]
    assert frame["oracle_exact"].all()
    assert (frame["next_fit_ratio"] <= 3).all()
    assert (frame["first_fit_ratio"] <= 3).all()
    assert (frame["next_fit"] >= frame["oracle"]).all()
