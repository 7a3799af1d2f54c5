"""
Module: oracle.py

Offline reference values every online run is measured against: clique number, greedy coloring,
the exact budgeted optimum for small instances, and the lower bounds used above that size.
"""

import heapq
import math
from collections.abc import Sequence
from dataclasses import dataclass, field
from fractions import Fraction

from loguru import logger as L

from dronesched.exceptions import InfeasibleRequest, InstanceTooLarge, MalformedRequest
from dronesched.models.intervals import Interval
from dronesched.models.reports import OracleResult, OracleSummary
from dronesched.settings import settings


def clique_number(intervals: Sequence[Interval]) -> OracleResult:
    """
    Largest number of requests sharing a time point, with the requests and the point.

    Intervals are closed: at a common value, starts are swept before ends.
    """
    events = sorted(
        (value, side, index)
        for index, interval in enumerate(intervals)
        for value, side in ((interval.left, 0), (interval.right, 1))
    )
    live: set[int] = set()
    best: tuple[int, ...] = ()
    point: Fraction | None = None
    for value, side, index in events:
        if side == 0:
            live.add(index)
            if len(live) > len(best):
                best = tuple(sorted(live))
                point = value
        else:
            live.discard(index)
    return OracleResult(value=len(best), clique=tuple(intervals[index].id for index in best), point=point)


def greedy_offline_coloring(intervals: Sequence[Interval]) -> OracleResult:
    """
    Left-endpoint order, each request gets the smallest color not used by an overlapping one.
    """
    ordered = sorted(intervals, key=lambda interval: (interval.left, interval.right))
    busy: list[tuple[Fraction, int]] = []
    free: list[int] = []
    coloring: dict[str, int] = {}
    used = 0
    for interval in ordered:
        while busy and busy[0][0] < interval.left:
            heapq.heappush(free, heapq.heappop(busy)[1])
        if free:
            color = heapq.heappop(free)
        else:
            used += 1
            color = used
        coloring[interval.id] = color
        heapq.heappush(busy, (interval.right, color))
    return OracleResult(value=used, coloring=coloring)


def volume_bound(intervals: Sequence[Interval], capacity: Fraction) -> int:
    """ceil(total cost / capacity)"""
    total = sum((interval.cost for interval in intervals), Fraction(0))
    return math.ceil(total / capacity)


def lower_bound(intervals: Sequence[Interval], budget: Fraction) -> int:
    return max(clique_number(intervals).value, volume_bound(intervals, budget))


def ovds_lower_bound(intervals: Sequence[Interval], capacities: Sequence[Fraction]) -> int:
    """
    Raises:
        MalformedRequest: no capacity given
    """
    if not capacities:
        raise MalformedRequest("at least one drone capacity is needed for the OVDS lower bound")
    return max(clique_number(intervals).value, volume_bound(intervals, max(capacities)))


@dataclass
class _Group:
    last_right: Fraction
    load: Fraction
    members: list[str] = field(default_factory=list)


@dataclass
class _Search:
    ordered: list[Interval]
    budget: Fraction
    floor: int
    best: int
    best_groups: list[list[str]]
    nodes: int = 0

    def visit(self, position: int, groups: list[_Group]) -> None:
        self.nodes += 1
        if len(groups) >= self.best or self.best <= self.floor:
            return
        if position == len(self.ordered):
            self.best = len(groups)
            self.best_groups = [list(group.members) for group in groups]
            return
        interval = self.ordered[position]
        for group in groups:
            if group.last_right < interval.left and group.load + interval.cost <= self.budget:
                saved = group.last_right
                group.last_right = interval.right
                group.load += interval.cost
                group.members.append(interval.id)
                self.visit(position + 1, groups)
                group.members.pop()
                group.load -= interval.cost
                group.last_right = saved
                if self.best <= self.floor:
                    return
        # opening a new group is only ever tried once per node
        groups.append(_Group(last_right=interval.right, load=interval.cost, members=[interval.id]))
        self.visit(position + 1, groups)
        groups.pop()


def exact_opt_budgeted(intervals: Sequence[Interval], budget: Fraction, limit: int | None = None) -> OracleResult:
    """
    Fewest drones serving every request, each drone carrying pairwise disjoint requests of total cost <= budget.

    Branch and bound over requests in left-endpoint order; stops as soon as the lower bound is reached.

    Raises:
        InstanceTooLarge: more requests than `limit` (settings.exhaustive_limit by default)
        InfeasibleRequest: a request costs more than the budget
    """
    limit = settings.exhaustive_limit if limit is None else limit
    if len(intervals) > limit:
        raise InstanceTooLarge(len(intervals), limit)
    for interval in intervals:
        if interval.cost > budget:
            raise InfeasibleRequest(interval.id, interval.cost, budget)
    if not intervals:
        return OracleResult(value=0, groups=())

    ordered = sorted(intervals, key=lambda interval: (interval.left, interval.right, interval.id))
    search = _Search(
        ordered=ordered,
        budget=budget,
        floor=lower_bound(intervals, budget),
        best=len(ordered) + 1,
        best_groups=[],
    )
    search.visit(0, [])
    L.debug(f"exact oracle: {search.nodes} nodes for {len(ordered)} requests, optimum {search.best}")
    return OracleResult(value=search.best, groups=tuple(tuple(members) for members in search.best_groups))


def summarize(intervals: Sequence[Interval], budget: Fraction, exact: bool = True) -> OracleSummary:
    """
    Clique number and lower bound, plus the exact optimum when asked for and the instance is small enough.
    """
    exact_result = None
    if exact and len(intervals) <= settings.exhaustive_limit:
        exact_result = exact_opt_budgeted(intervals, budget)
    elif exact:
        L.info(f"{len(intervals)} requests exceed the exhaustive limit {settings.exhaustive_limit}, lower bound only")
    return OracleSummary(
        clique_number=clique_number(intervals).value,
        lower_bound=lower_bound(intervals, budget),
        exact=exact_result,
    )
