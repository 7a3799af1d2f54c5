"""
Module: variable_size.py

Offline requests, online drones (OVDS): every request is known upfront, drones of varying battery capacity are
handed out one at a time and each one is filled greedily from a single cost-sorted idNumber list.
"""

import heapq
from collections import deque
from collections.abc import Iterator, Sequence
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path
from typing import Protocol

import numpy as np
from loguru import logger as L

from dronesched.exceptions import CapacitySourceExhausted, DroneCapacityViolation, DuplicateRequest, MalformedRequest
from dronesched.models.intervals import Color, Interval
from dronesched.models.reports import OvdsDrone, OvdsReport
from dronesched.services.id_pool import IdPool
from dronesched.services.normalize import default_epsilon, has_shared_endpoints, normalize_endpoints
from dronesched.settings import settings
from dronesched.utils.io import read_capacities
from dronesched.utils.rational import parse_rational


class DroneSource(Protocol):
    """Pull contract: every call yields the capacity of the next drone."""

    def request_drone(self) -> Fraction: ...


class CapacityListSource:
    """Replays a finite list of capacities."""

    def __init__(self, capacities: Sequence[Fraction]) -> None:
        self._capacities: Iterator[Fraction] = iter(capacities)
        self.drawn = 0

    def request_drone(self) -> Fraction:
        capacity = next(self._capacities, None)
        if capacity is None:
            raise CapacitySourceExhausted(self.drawn)
        self.drawn += 1
        return capacity


class UniformCapacitySource:
    """
    Capacities drawn uniformly from a grid over [lo, hi]; the same seed yields the same drones.
    """

    def __init__(self, lo: Fraction, hi: Fraction, seed: int = 0, grid: int = 1000) -> None:
        if lo <= 0 or hi < lo:
            raise MalformedRequest(f"capacity range [{lo}, {hi}] must be positive and non-empty")
        self.lo = lo
        self.hi = hi
        self.grid = grid
        self._rng = np.random.default_rng(seed)

    def request_drone(self) -> Fraction:
        step = int(self._rng.integers(0, self.grid, endpoint=True))
        return self.lo + (self.hi - self.lo) * Fraction(step, self.grid)


def parse_capacity_source(spec: str) -> DroneSource:
    """
    Builds a source from "uniform:lo,hi,seed" or from the path of a capacity file.
    """
    if spec.startswith("uniform:"):
        parts = [part.strip() for part in spec.removeprefix("uniform:").split(",")]
        if len(parts) not in (2, 3):
            raise MalformedRequest(f"expected uniform:lo,hi[,seed], got {spec!r}")
        try:
            lo, hi = parse_rational(parts[0]), parse_rational(parts[1])
            seed = int(parts[2]) if len(parts) == 3 else 0
        except ValueError as exc:
            raise MalformedRequest(f"invalid capacity source {spec!r}: {exc}") from exc
        return UniformCapacitySource(lo, hi, seed)
    return CapacityListSource(read_capacities(Path(spec)))


@dataclass(frozen=True)
class IdPartition:
    """
    Requests grouped by idNumber: `lists[i - 1]` holds the requests of idNumber i, pairwise disjoint,
    sorted by non-decreasing cost.
    """

    lists: tuple[tuple[Interval, ...], ...]
    id_numbers: dict[str, int]

    @property
    def g(self) -> int:
        return len(self.lists)


def partition_by_id(intervals: Sequence[Interval]) -> IdPartition:
    """
    Assigns idNumbers by the same left-to-right sweep the online scheduler uses: at each endpoint value
    the ending request frees its id, the starting one takes the smallest free id.

    Expects distinct endpoints (see normalize_endpoints).
    """
    events: list[tuple[Fraction, int, str]] = []
    for interval in intervals:
        heapq.heappush(events, (interval.left, 1, interval.id))
        heapq.heappush(events, (interval.right, 0, interval.id))

    pool = IdPool()
    id_numbers: dict[str, int] = {}
    while events:
        _, starting, request_id = heapq.heappop(events)
        if starting:
            id_numbers[request_id] = pool.acquire_id()
        else:
            pool.release_id(id_numbers[request_id])

    lists: list[list[Interval]] = [[] for _ in range(pool.g_id_number)]
    for interval in intervals:
        lists[id_numbers[interval.id] - 1].append(interval)
    for items in lists:
        items.sort(key=lambda interval: interval.cost)
    L.debug(f"partitioned {len(intervals)} requests into {pool.g_id_number} idNumber lists")
    return IdPartition(lists=tuple(tuple(items) for items in lists), id_numbers=id_numbers)


def schedule_ovds(partition: IdPartition, source: DroneSource) -> OvdsReport:
    """
    Empties the lists one after the other: a drone is requested, the cheapest remaining requests of the
    current list are loaded while they fit, and the drone leaves at the first request that does not.

    Raises:
        DroneCapacityViolation: a drone is smaller than the largest remaining request of its list
    """
    colors: dict[str, Color] = {}
    drones: list[OvdsDrone] = []
    for id_number, items in enumerate(partition.lists, start=1):
        pending = deque(items)
        bin_number = 0
        while pending:
            capacity = source.request_drone()
            required = pending[-1].cost
            if capacity < required:
                raise DroneCapacityViolation(capacity, required)
            bin_number += 1
            color = Color(id_number=id_number, bin_number=bin_number)
            remaining = capacity
            served: list[str] = []
            while pending and pending[0].cost <= remaining:
                interval = pending.popleft()
                remaining -= interval.cost
                colors[interval.id] = color
                served.append(interval.id)
            drones.append(OvdsDrone(color=color, capacity=capacity, load=capacity - remaining, served=tuple(served)))

    capacities = [drone.capacity for drone in drones]
    alpha = max(capacities) / min(capacities) if capacities else Fraction(1)
    report = OvdsReport(
        colors=colors,
        total_drones=len(drones),
        g=partition.g,
        lists=tuple(tuple(interval.id for interval in items) for items in partition.lists),
        drones=tuple(drones),
        alpha=alpha,
        total_cost=sum((interval.cost for items in partition.lists for interval in items), Fraction(0)),
    )
    L.info(f"OVDS: {report.total_drones} drones over {report.g} lists, alpha={alpha}")
    return report


def check_consecutive_overflow(report: OvdsReport) -> list[tuple[Color, Color]]:
    """
    Pairs of consecutive drones of one list whose combined load fits in the first drone's capacity.

    A greedy fill never produces such a pair, so an empty result certifies the run.
    """
    violations: list[tuple[Color, Color]] = []
    for first, second in zip(report.drones, report.drones[1:]):
        if first.color.id_number != second.color.id_number:
            continue
        if first.load + second.load <= first.capacity:
            violations.append((first.color, second.color))
    return violations


def solve_ovds(intervals: Sequence[Interval], source: DroneSource, epsilon: Fraction | None = None) -> OvdsReport:
    """
    Separates shared endpoints, partitions by idNumber and serves every list from `source`.

    Raises:
        DuplicateRequest: two requests with the same id
    """
    seen: set[str] = set()
    for interval in intervals:
        if interval.id in seen:
            raise DuplicateRequest(interval.id)
        seen.add(interval.id)
    requests = list(intervals)
    if has_shared_endpoints(requests):
        step = epsilon or settings.epsilon or default_epsilon(requests)
        assert step is not None
        requests = normalize_endpoints(requests, step)
    return schedule_ovds(partition_by_id(requests), source)
