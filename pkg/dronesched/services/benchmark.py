"""
Module: benchmark.py

Doubling experiments: per-update time of the online scheduler and total time of the OVDS pipeline
"""

import math
import statistics
import time
from collections.abc import Sequence
from fractions import Fraction

import numpy as np
import pandas as pd
from loguru import logger as L

from dronesched.exceptions import MalformedRequest
from dronesched.models.enums import Strategy
from dronesched.services.harness import adversarial_instance
from dronesched.services.scheduler import SchedulerState, drive
from dronesched.services.variable_size import UniformCapacitySource, partition_by_id, schedule_ovds
from dronesched.settings import settings

BENCH_COLUMNS = ["n", "strategy", "per_update_ns", "growth", "ovds_seconds", "ovds_per_nlogn"]
# overlap of the OVDS instances, so every idNumber list holds many requests
OVDS_WIDTH = 8


def _per_update_ns(n: int, strategy: Strategy, budget: Fraction, seed: int) -> float:
    instance = adversarial_instance(n, budget, seed)
    state = drive(SchedulerState(budget, strategy, timed=True), instance.intervals)
    return float(np.mean(state.latencies_ns))


def _ovds_seconds(n: int, budget: Fraction, seed: int) -> float:
    instance = adversarial_instance(n, budget, seed, width=OVDS_WIDTH)
    source = UniformCapacitySource(budget, 2 * budget, seed)
    started = time.perf_counter()
    schedule_ovds(partition_by_id(instance.intervals), source)
    return time.perf_counter() - started


def bench_doubling(
    sizes: Sequence[int], strategy: Strategy, seeds: int | None = None, budget: Fraction = Fraction(1)
) -> pd.DataFrame:
    """
    One row per size: median over seeds of the mean per-update time on all-overlapping instances, its growth
    against the previous size, and the OVDS time normalized by n log n.

    Raises:
        MalformedRequest: sizes not strictly increasing, or a size below 2
    """
    if any(size < 2 for size in sizes) or any(after <= before for before, after in zip(sizes, sizes[1:])):
        raise MalformedRequest(f"benchmark sizes must be strictly increasing and at least 2, got {list(sizes)}")
    runs = seeds or settings.bench_seeds

    rows = []
    previous: float | None = None
    for n in sizes:
        per_update = statistics.median(_per_update_ns(n, strategy, budget, seed) for seed in range(runs))
        ovds = statistics.median(_ovds_seconds(n, budget, seed) for seed in range(runs))
        rows.append(
            {
                "n": n,
                "strategy": str(strategy),
                "per_update_ns": per_update,
                "growth": per_update / previous if previous else math.nan,
                "ovds_seconds": ovds,
                "ovds_per_nlogn": ovds / (n * math.log2(n)),
            }
        )
        previous = per_update
        L.info(f"n={n}: {per_update:.0f} ns per update, OVDS {ovds:.3f} s")
    return pd.DataFrame(rows, columns=BENCH_COLUMNS)
