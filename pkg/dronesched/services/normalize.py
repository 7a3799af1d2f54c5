"""
Module: normalize.py

Instance validation and the epsilon perturbation that makes all interval endpoints distinct
"""

from collections import defaultdict
from collections.abc import Sequence
from fractions import Fraction

from loguru import logger as L

from dronesched.exceptions import DuplicateRequest, EpsilonTooLarge, InfeasibleRequest, MalformedRequest
from dronesched.models.enums import Endpoint
from dronesched.models.intervals import Instance, Interval
from dronesched.settings import settings


def endpoint_values(intervals: Sequence[Interval]) -> list[Fraction]:
    """Sorted distinct endpoint values."""
    return sorted({value for interval in intervals for value in (interval.left, interval.right)})


def minimum_gap(intervals: Sequence[Interval]) -> Fraction | None:
    """Smallest positive difference between two distinct endpoint values, None without intervals."""
    values = endpoint_values(intervals)
    if len(values) < 2:
        return None
    return min(high - low for low, high in zip(values, values[1:]))


def default_epsilon(intervals: Sequence[Interval]) -> Fraction | None:
    """A quarter of the minimum endpoint gap, always inside the safe range of normalize_endpoints."""
    gap = minimum_gap(intervals)
    return gap / 4 if gap is not None else None


def has_shared_endpoints(intervals: Sequence[Interval]) -> bool:
    return len(endpoint_values(intervals)) < 2 * len(intervals)


def normalize_endpoints(intervals: Sequence[Interval], epsilon: Fraction) -> list[Interval]:
    """
    Shrinks intervals that share an endpoint value until all 2n endpoints are distinct.

    At a value shared by both left and right endpoints, every right endpoint moves left and every left
    endpoint moves right (the [l, r - eps] / [l + eps, r] transformation). At a value shared only by
    endpoints of one side, the earliest-arriving interval keeps it and the later ones shrink inward.
    Several endpoints moving the same way are staggered within eps, in arrival order. Every move is
    below half the minimum gap, so endpoints that were not tied keep their relative order.

    Args:
        intervals: requests, in any order
        epsilon: perturbation size
    Returns:
        The intervals in input order, perturbed where needed
    Raises:
        MalformedRequest: if epsilon is not positive
        EpsilonTooLarge: if endpoints are shared and epsilon is not below half the minimum gap (and half the
            minimum length)
    """
    if epsilon <= 0:
        raise MalformedRequest(f"epsilon must be positive, got {epsilon}")
    if not has_shared_endpoints(intervals):
        return list(intervals)

    gap = minimum_gap(intervals)
    shortest = min(interval.length for interval in intervals)
    limit = min(shortest, gap) / 2 if gap is not None else shortest / 2
    if epsilon >= limit:
        raise EpsilonTooLarge(epsilon, limit)

    arrival_rank = {
        index: rank
        for rank, index in enumerate(sorted(range(len(intervals)), key=lambda k: (intervals[k].arrival, k)))
    }
    owners: dict[Fraction, list[tuple[int, Endpoint]]] = defaultdict(list)
    for index, interval in enumerate(intervals):
        owners[interval.left].append((index, Endpoint.LEFT))
        owners[interval.right].append((index, Endpoint.RIGHT))

    lefts = [interval.left for interval in intervals]
    rights = [interval.right for interval in intervals]
    for value, shared in owners.items():
        if len(shared) < 2:
            continue
        on_left = sorted((k for k, side in shared if side is Endpoint.LEFT), key=arrival_rank.__getitem__)
        on_right = sorted((k for k, side in shared if side is Endpoint.RIGHT), key=arrival_rank.__getitem__)
        if on_left and on_right:
            for position, k in enumerate(on_right, start=1):
                rights[k] = value - epsilon * position / len(on_right)
            for position, k in enumerate(on_left, start=1):
                lefts[k] = value + epsilon * position / len(on_left)
        elif on_left:
            for position, k in enumerate(on_left[1:], start=1):
                lefts[k] = value + epsilon * position / (len(on_left) - 1)
        else:
            for position, k in enumerate(on_right[1:], start=1):
                rights[k] = value - epsilon * position / (len(on_right) - 1)

    normalized = []
    moved = 0
    for interval, left, right in zip(intervals, lefts, rights):
        if left != interval.left or right != interval.right:
            moved += 1
            interval = interval.model_copy(update={"left": left, "right": right})
        normalized.append(interval)
    if moved:
        L.debug(f"perturbed {moved} intervals with epsilon {epsilon}")
    return normalized


def validate_intervals(intervals: Sequence[Interval], budget: Fraction) -> None:
    """
    Per-request checks shared by instance validation and the online scheduler.

    Raises:
        DuplicateRequest: two requests with the same id
        MalformedRequest: arrival after the left endpoint
        InfeasibleRequest: cost above the budget
    """
    seen: set[str] = set()
    for interval in intervals:
        if interval.id in seen:
            raise DuplicateRequest(interval.id)
        seen.add(interval.id)
        check_request(interval, budget)


def check_request(interval: Interval, budget: Fraction) -> None:
    if interval.arrival > interval.left:
        raise MalformedRequest(
            f"Request {interval.id!r} arrives at {interval.arrival}, after its left endpoint {interval.left}",
            details={"id": interval.id},
        )
    if interval.cost > budget:
        raise InfeasibleRequest(interval.id, interval.cost, budget)


def validate_instance(instance: Instance, epsilon: Fraction | None = None) -> Instance:
    """
    Orders an instance by arrival and perturbs shared endpoints.

    Args:
        instance: raw instance
        epsilon: perturbation size; falls back to settings.epsilon, then to default_epsilon
    Returns:
        An instance whose endpoints are pairwise distinct, ordered by arrival. Its `epsilon` is the perturbation
        applied here, or the one carried by `instance` when nothing was shared.
    """
    intervals = list(instance.intervals)
    validate_intervals(intervals, instance.budget)
    applied = instance.epsilon
    if has_shared_endpoints(intervals):
        applied = epsilon or settings.epsilon or default_epsilon(intervals)
        assert applied is not None
        intervals = normalize_endpoints(intervals, applied)
    intervals.sort(key=lambda interval: interval.arrival)
    return instance.model_copy(update={"intervals": tuple(intervals), "epsilon": applied})
