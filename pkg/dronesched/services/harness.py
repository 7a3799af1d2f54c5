"""
Module: harness.py

Reproducible instances and side-by-side strategy runs against the offline oracles
"""

import math
from fractions import Fraction

import numpy as np
import pandas as pd
from loguru import logger as L

from dronesched.exceptions import HorizonTooSmall, MalformedRequest
from dronesched.models.enums import Strategy
from dronesched.models.intervals import Instance, Interval
from dronesched.models.reports import GenSpec, RunMetrics, StrategyComparison
from dronesched.services.normalize import validate_instance
from dronesched.services.oracle import clique_number, exact_opt_budgeted, lower_bound
from dronesched.services.scheduler import schedule_instance
from dronesched.settings import settings

COST_GRID = 1000
COMPARE_COLUMNS = [
    "seed",
    "n",
    "oracle",
    "oracle_exact",
    "g",
    "next_fit",
    "first_fit",
    "next_fit_ratio",
    "first_fit_ratio",
]


def _cost(rng: np.random.Generator, budget: Fraction) -> Fraction:
    # uniform on (0, B], one thousandth of B apart
    return Fraction(int(rng.integers(1, COST_GRID, endpoint=True)), COST_GRID) * budget


def _draw(rng: np.random.Generator, low: int, high: int, ticks: int) -> tuple[int, int]:
    length = int(rng.integers(low, high, endpoint=True))
    left = int(rng.integers(0, ticks - length, endpoint=True))
    return left, left + length


def generate_instance(spec: GenSpec) -> Instance:
    """
    Draws `spec.n` requests on a grid of `spec.grid` ticks per time unit, then separates shared endpoints and
    sets every arrival to its left endpoint.

    With `max_overlap`, a request that would raise the clique number above it is redrawn, at most
    `settings.max_overlap_attempts` times. Each check sweeps the requests drawn so far.

    Raises:
        MalformedRequest: min_len > max_len
        HorizonTooSmall: the horizon cannot hold the requested lengths or 2n distinct endpoints,
            or the overlap target cannot be met
    """
    if spec.min_len > spec.max_len:
        raise MalformedRequest(f"min_len {spec.min_len} exceeds max_len {spec.max_len}")
    if spec.n == 0:
        return Instance(intervals=(), budget=spec.budget)

    grid = Fraction(1, spec.grid)
    ticks = math.floor(spec.horizon * spec.grid)
    low = max(1, math.ceil(spec.min_len * spec.grid))
    high = math.floor(spec.max_len * spec.grid)
    if spec.max_len > spec.horizon or high < low:
        raise HorizonTooSmall(f"lengths up to {spec.max_len} do not fit a horizon of {spec.horizon}")
    if ticks < 2 * spec.n:
        raise HorizonTooSmall(f"a horizon of {spec.horizon} cannot hold {2 * spec.n} distinct endpoints")

    rng = np.random.default_rng(spec.seed)
    intervals: list[Interval] = []
    for index in range(spec.n):
        for _ in range(settings.max_overlap_attempts):
            left, right = _draw(rng, low, high, ticks)
            candidate = Interval(
                id=f"r{index + 1}",
                arrival=left * grid,
                left=left * grid,
                right=right * grid,
                cost=_cost(rng, spec.budget),
            )
            if spec.max_overlap is None or clique_number([*intervals, candidate]).value <= spec.max_overlap:
                break
        else:
            raise HorizonTooSmall(
                f"no placement for request {index + 1} keeps the overlap at most {spec.max_overlap} "
                f"after {settings.max_overlap_attempts} attempts"
            )
        intervals.append(candidate)

    validated = validate_instance(Instance(intervals=tuple(intervals), budget=spec.budget))
    # normalization may move left endpoints
    arrivals_on_left = sorted(
        (interval.model_copy(update={"arrival": interval.left}) for interval in validated.intervals),
        key=lambda interval: interval.arrival,
    )
    L.debug(f"generated {spec.n} requests with seed {spec.seed}")
    return validated.model_copy(update={"intervals": tuple(arrivals_on_left)})


def adversarial_instance(n: int, budget: Fraction, seed: int = 0, width: int | None = None) -> Instance:
    """
    Requests [i, n + i] for i = 1..n: all of them contain the time point n, so every request needs its own idNumber.

    With `width`, requests are [i, i + width + 1/2] instead and at most width + 1 of them overlap.
    """
    rng = np.random.default_rng(seed)
    reach = [Fraction(n + i) if width is None else Fraction(2 * (i + width) + 1, 2) for i in range(1, n + 1)]
    intervals = tuple(
        Interval(id=f"a{i}", arrival=Fraction(i), left=Fraction(i), right=right, cost=_cost(rng, budget))
        for i, right in zip(range(1, n + 1), reach)
    )
    return Instance(intervals=intervals, budget=budget)


def compare_strategies(instance: Instance, timed: bool = False) -> StrategyComparison:
    """
    Runs next-fit and first-fit on the same instance and measures both against the exact optimum
    (or the lower bound above the exhaustive limit).

    Latencies are only reported when `timed`, so untimed comparisons are reproducible byte for byte.
    """
    validated = validate_instance(instance)
    exact = len(validated.intervals) <= settings.exhaustive_limit
    if exact:
        oracle_value = exact_opt_budgeted(validated.intervals, validated.budget).value
    else:
        oracle_value = lower_bound(validated.intervals, validated.budget)
    clique = clique_number(validated.intervals).value

    metrics: dict[Strategy, RunMetrics] = {}
    for strategy in Strategy:
        state, report = schedule_instance(validated, strategy, timed=timed)
        if report.g_id_number < clique:
            L.warning(f"{strategy}: gIdNumber {report.g_id_number} is below the clique number {clique}")
        metrics[strategy] = RunMetrics(
            strategy=strategy,
            drone_count=report.drone_count,
            oracle_value=oracle_value,
            oracle_exact=exact,
            ratio=report.drone_count / max(oracle_value, 1),
            g_id_number=report.g_id_number,
            peak_live=state.peak_live,
            latency_ns=state.latency_quantiles() if timed else None,
        )
    return StrategyComparison(next_fit=metrics[Strategy.NEXT_FIT], first_fit=metrics[Strategy.FIRST_FIT])


def compare_random(spec: GenSpec, instances: int) -> pd.DataFrame:
    """
    One row per random instance (seeds spec.seed, spec.seed + 1, ...) with both drone counts and ratios.
    """
    rows = []
    for offset in range(instances):
        seed = spec.seed + offset
        comparison = compare_strategies(generate_instance(spec.model_copy(update={"seed": seed})))
        rows.append(
            {
                "seed": seed,
                "n": spec.n,
                "oracle": comparison.next_fit.oracle_value,
                "oracle_exact": comparison.next_fit.oracle_exact,
                "g": comparison.next_fit.g_id_number,
                "next_fit": comparison.next_fit.drone_count,
                "first_fit": comparison.first_fit.drone_count,
                "next_fit_ratio": comparison.next_fit.ratio,
                "first_fit_ratio": comparison.first_fit.ratio,
            }
        )
    L.info(f"compared both strategies on {instances} instances of {spec.n} requests")
    return pd.DataFrame(rows, columns=COMPARE_COLUMNS)
