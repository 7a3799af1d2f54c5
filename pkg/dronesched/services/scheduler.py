"""
Module: scheduler.py

Online drone scheduling: requests arrive over time and each one gets its drone color at its left endpoint.

At every time value at most one thing happens: the live request whose right endpoint is reached frees its
idNumber, or else the pending request whose left endpoint is reached is colored. Endpoints are distinct, so
the two never coincide. Colors are therefore assigned in increasing left-endpoint order, and the requests
live at coloring time all contain that time point.
"""

import heapq
import time
from collections.abc import Sequence
from fractions import Fraction

import numpy as np
from loguru import logger as L

from dronesched.exceptions import DuplicateRequest, EndpointCollision, MissedEvent, OutOfOrder, StrategyMismatch
from dronesched.models.enums import EventKind, Strategy
from dronesched.models.intervals import Assignment, Color, Instance, Interval
from dronesched.models.reports import CompetitiveCertificate, DroneUsage, EventOutcome, ScheduleReport
from dronesched.services.bin_packing import (
    FirstFitTree,
    NextFitState,
    PlacementTrace,
    firstfit_place,
    nextfit_place,
)
from dronesched.services.id_pool import IdPool
from dronesched.services.normalize import check_request, validate_instance

_IDLE = EventKind.IDLE


class SchedulerState:
    """
    Event-driven state of one scheduling run.

    Args:
        budget: battery capacity B of every drone
        strategy: bin placement rule, fixed for the whole run
        trace: optional placement log (enables first-fit minimality audits; costs O(#bins) per placement)
        record_events: keep every EventOutcome in `events`
        timed: record the duration of every tick in `latencies_ns`
    """

    def __init__(
        self,
        budget: Fraction,
        strategy: Strategy,
        *,
        trace: PlacementTrace | None = None,
        record_events: bool = False,
        timed: bool = False,
    ) -> None:
        self.budget = budget
        self.strategy = strategy
        self.trace = trace
        self.record_events = record_events
        self.timed = timed

        self.intervals: dict[str, Interval] = {}
        self.costs: dict[str, Fraction] = {}
        self.left_heap: list[tuple[Fraction, str]] = []
        self.right_heap: list[tuple[Fraction, str]] = []
        self.colors: dict[str, Color] = {}
        self.archive: dict[str, Color] = {}
        self.id_pool = IdPool()
        self.packing: NextFitState | FirstFitTree = (
            NextFitState(budget) if strategy is Strategy.NEXT_FIT else FirstFitTree(budget)
        )

        self.last_tick: Fraction | None = None
        self.last_arrival: Fraction | None = None
        self._endpoints: set[Fraction] = set()
        self._submitted: set[str] = set()
        self.served: list[str] = []
        self.live_count = 0
        self.peak_live = 0
        self.events: list[EventOutcome] = []
        self.latencies_ns: list[int] = []

    def submit(self, interval: Interval) -> None:
        """
        Records a request arriving at `interval.arrival`; its color is computed later, at its left endpoint.

        Raises:
            DuplicateRequest: the id was submitted before
            OutOfOrder: arrival before an already processed time, a second request at the same time step,
                or a left endpoint that was already ticked
            MalformedRequest / InfeasibleRequest: per-request validation
            EndpointCollision: an endpoint value already used by a live or archived request
        """
        if interval.id in self._submitted:
            raise DuplicateRequest(interval.id)
        check_request(interval, self.budget)
        if self.last_tick is not None and interval.arrival < self.last_tick:
            raise OutOfOrder(
                f"Request {interval.id!r} arrives at {interval.arrival}, time {self.last_tick} was already processed",
                details={"id": interval.id},
            )
        if self.last_arrival is not None and interval.arrival <= self.last_arrival:
            raise OutOfOrder(
                f"Request {interval.id!r} arrives at {interval.arrival}, at most one request per time step "
                f"and arrivals must increase (last {self.last_arrival})",
                details={"id": interval.id},
            )
        if self.last_tick is not None and interval.left <= self.last_tick:
            raise OutOfOrder(
                f"Left endpoint {interval.left} of request {interval.id!r} was already processed",
                details={"id": interval.id},
            )
        for value in (interval.left, interval.right):
            if value in self._endpoints:
                raise EndpointCollision(interval.id, value)

        self._submitted.add(interval.id)
        self._endpoints.update((interval.left, interval.right))
        self.intervals[interval.id] = interval
        self.costs[interval.id] = interval.cost
        heapq.heappush(self.left_heap, (interval.left, interval.id))
        heapq.heappush(self.right_heap, (interval.right, interval.id))
        self.last_arrival = interval.arrival
        if self.record_events:
            self.events.append(EventOutcome(time=interval.arrival, kind=EventKind.INSERTED, request_id=interval.id))

    def tick(self, t: Fraction) -> EventOutcome:
        """
        Handles time value `t`: deletion first, otherwise coloring, otherwise idle.

        Raises:
            OutOfOrder: `t` does not exceed the previous tick
            MissedEvent: a pending endpoint lies strictly before `t` (an earlier tick was skipped)
        """
        if self.last_tick is not None and t <= self.last_tick:
            raise OutOfOrder(f"Tick {t} does not follow tick {self.last_tick}")
        started = time.perf_counter_ns() if self.timed else 0
        for heap in (self.right_heap, self.left_heap):
            if heap and heap[0][0] < t:
                raise MissedEvent(heap[0][1], heap[0][0], t)
        self.last_tick = t

        if self.right_heap and self.right_heap[0][0] == t:
            _, request_id = heapq.heappop(self.right_heap)
            color = self.colors.pop(request_id)
            self.id_pool.release_id(color.id_number)
            self.archive[request_id] = color
            del self.intervals[request_id]
            self.live_count -= 1
            outcome = EventOutcome(time=t, kind=EventKind.DELETED, request_id=request_id)
        elif self.left_heap and self.left_heap[0][0] == t:
            _, request_id = heapq.heappop(self.left_heap)
            color = self._color(self.intervals[request_id])
            self.colors[request_id] = color
            self.served.append(request_id)
            self.live_count += 1
            self.peak_live = max(self.peak_live, self.live_count)
            outcome = EventOutcome(time=t, kind=EventKind.COLORED, request_id=request_id, color=color)
        else:
            outcome = EventOutcome(time=t, kind=_IDLE)

        if self.timed:
            self.latencies_ns.append(time.perf_counter_ns() - started)
        if self.record_events:
            self.events.append(outcome)
        return outcome

    def _color(self, interval: Interval) -> Color:
        id_number = self.id_pool.acquire_id()
        if isinstance(self.packing, NextFitState):
            bin_number = nextfit_place(self.packing, id_number, interval.cost, self.trace)
        else:
            bin_number = firstfit_place(self.packing, id_number, interval.cost, self.trace)
        return Color(id_number=id_number, bin_number=bin_number)

    def color_of(self, request_id: str) -> Color | None:
        """Live color, else archived color, else None (pending or unknown)."""
        return self.colors.get(request_id) or self.archive.get(request_id)

    def live_ids(self) -> list[str]:
        return list(self.colors)

    def assignment(self) -> Assignment:
        return Assignment(colors={request_id: self.color_of(request_id) for request_id in self.served})

    def latency_quantiles(self) -> dict[str, float] | None:
        if not self.latencies_ns:
            return None
        samples = np.asarray(self.latencies_ns, dtype=np.float64)
        p50, p90, p99 = np.quantile(samples, [0.5, 0.9, 0.99])
        return {"mean": float(samples.mean()), "p50": float(p50), "p90": float(p90), "p99": float(p99)}


def drive(state: SchedulerState, stream: Sequence[Interval], strategy: Strategy | None = None) -> SchedulerState:
    """
    Replays a request stream through the scheduler: at every distinct arrival or endpoint value, the request
    arriving then is submitted first and the endpoint event is handled second.

    Raises:
        StrategyMismatch: `strategy` differs from the one the state was built with
    """
    if strategy is not None and strategy is not state.strategy:
        raise StrategyMismatch(state.strategy, strategy)
    ordered = sorted(stream, key=lambda interval: interval.arrival)
    endpoints = {value for interval in ordered for value in (interval.left, interval.right)}
    times = sorted(endpoints.union(interval.arrival for interval in ordered))

    position = 0
    for t in times:
        while position < len(ordered) and ordered[position].arrival == t:
            state.submit(ordered[position])
            position += 1
        if t in endpoints:
            state.tick(t)
    L.debug(f"{state.strategy} run over {len(times)} time values, g={state.id_pool.g_id_number}")
    return state


def run(
    stream: Sequence[Interval], budget: Fraction, strategy: Strategy, *, trace: PlacementTrace | None = None
) -> Assignment:
    """
    Colors a whole request stream; deterministic for a given stream and strategy.
    """
    state = drive(SchedulerState(budget, strategy, trace=trace), stream)
    return state.assignment()


def build_report(state: SchedulerState, epsilon: Fraction | None = None) -> ScheduleReport:
    """
    Per-request colors plus per-drone load and served requests (in coloring order).
    """
    assignment = state.assignment()
    served: dict[tuple[int, int], list[str]] = {}
    loads: dict[tuple[int, int], Fraction] = {}
    costs = state.costs
    for request_id, color in assignment.colors.items():
        key = color.as_tuple()
        served.setdefault(key, []).append(request_id)
        loads[key] = loads.get(key, Fraction(0)) + costs[request_id]
    drones = tuple(
        DroneUsage(color=Color(id_number=key[0], bin_number=key[1]), load=loads[key], served=tuple(served[key]))
        for key in sorted(served)
    )
    return ScheduleReport(
        strategy=state.strategy,
        budget=state.budget,
        epsilon=epsilon,
        colors=assignment.colors,
        drone_count=assignment.drone_count,
        g_id_number=state.id_pool.g_id_number,
        drones=drones,
    )


def schedule_instance(
    instance: Instance,
    strategy: Strategy,
    *,
    epsilon: Fraction | None = None,
    trace: PlacementTrace | None = None,
    timed: bool = False,
) -> tuple[SchedulerState, ScheduleReport]:
    """
    Validates (and normalizes) an instance, runs it, and builds the report.
    """
    validated = validate_instance(instance, epsilon)
    state = drive(SchedulerState(validated.budget, strategy, trace=trace, timed=timed), validated.intervals)
    report = build_report(state, validated.epsilon)
    L.info(f"{strategy}: {report.drone_count} drones for {len(validated.intervals)} requests (g={report.g_id_number})")
    return state, report


def competitive_certificate(
    assignment: Assignment, intervals: Sequence[Interval], budget: Fraction
) -> CompetitiveCertificate:
    """
    Per-idNumber bin counts and costs of a finished run, with the bound 2 * sum(cost) / B + g.
    """
    cost_by_id = {interval.id: interval.cost for interval in intervals}
    bins: dict[int, set[int]] = {}
    cost_per_id: dict[int, Fraction] = {}
    for request_id, color in assignment.colors.items():
        bins.setdefault(color.id_number, set()).add(color.bin_number)
        cost_per_id[color.id_number] = cost_per_id.get(color.id_number, Fraction(0)) + cost_by_id[request_id]
    bins_per_id = {id_number: len(numbers) for id_number, numbers in sorted(bins.items())}
    volume = sum(cost_per_id.values(), Fraction(0)) / budget
    g = max(bins_per_id, default=0)
    return CompetitiveCertificate(
        bins_per_id=bins_per_id,
        cost_per_id=dict(sorted(cost_per_id.items())),
        g=g,
        alg=sum(bins_per_id.values()),
        volume_bound=volume,
        chain_bound=2 * volume + g,
    )
