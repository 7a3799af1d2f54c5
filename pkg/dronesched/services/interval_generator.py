"""
Module: interval_generator.py

Turns a customer request into a delivery interval: the drone takes off from one truck stop, serves the customer
and lands on a later stop, and must be back no later than the truck.
"""

from collections.abc import Sequence
from decimal import ROUND_CEILING, Decimal, localcontext
from fractions import Fraction
from math import isqrt

from loguru import logger as L

from dronesched.exceptions import InvalidStopOrder, MalformedRequest, NoFeasibleDelivery, OutOfOrder
from dronesched.models.intervals import Interval
from dronesched.models.routes import DeliveryRequest, GeneratedInterval, GenerationBatch, RejectedRequest, Route, Stop
from dronesched.services.normalize import default_epsilon, has_shared_endpoints, normalize_endpoints
from dronesched.settings import settings
from dronesched.utils.rational import to_decimal


def check_route(route: Route) -> None:
    """
    Raises:
        InvalidStopOrder: fewer than two stops, or visit times not strictly increasing
    """
    if len(route.stops) < 2:
        raise InvalidStopOrder(f"a route needs at least two stops, got {len(route.stops)}")
    for index, (before, after) in enumerate(zip(route.stops, route.stops[1:]), start=1):
        if after.visit_time <= before.visit_time:
            raise InvalidStopOrder(
                f"stop {index} is visited at {after.visit_time}, not after stop {index - 1} ({before.visit_time})"
            )


def _exact_sqrt(value: Fraction) -> Fraction | None:
    root_num, root_den = isqrt(value.numerator), isqrt(value.denominator)
    if root_num * root_num == value.numerator and root_den * root_den == value.denominator:
        return Fraction(root_num, root_den)
    return None


def _distance(ax: Fraction, ay: Fraction, bx: Fraction, by: Fraction) -> Fraction | Decimal:
    squared = (ax - bx) ** 2 + (ay - by) ** 2
    exact = _exact_sqrt(squared)
    if exact is not None:
        return exact
    return to_decimal(squared).sqrt()


def _round_up(value: Fraction | Decimal, quantum: Fraction) -> Fraction:
    steps = value / to_decimal(quantum) if isinstance(value, Decimal) else value / quantum
    if isinstance(steps, Decimal):
        ticks = int(steps.to_integral_value(rounding=ROUND_CEILING))
    else:
        ticks = -(-steps.numerator // steps.denominator)
    return max(ticks, 1) * quantum


def _legs(stop: Stop, request: DeliveryRequest) -> Fraction | Decimal:
    return _distance(stop.x, stop.y, request.x, request.y)


def _flight_cost(
    outbound: Fraction | Decimal, inbound: Fraction | Decimal, speed: Fraction, quantum: Fraction
) -> Fraction:
    if isinstance(outbound, Fraction) and isinstance(inbound, Fraction):
        return _round_up((outbound + inbound) / speed, quantum)
    total = (outbound if isinstance(outbound, Decimal) else to_decimal(outbound)) + (
        inbound if isinstance(inbound, Decimal) else to_decimal(inbound)
    )
    return _round_up(total / to_decimal(speed), quantum)


def delivery_cost(
    takeoff: Stop, request: DeliveryRequest, landing: Stop, drone_speed: Fraction, quantum: Fraction | None = None
) -> Fraction:
    """
    Flight time takeoff -> customer -> landing, rounded up to the quantum grid (at least one quantum).

    Distances with an exact rational square root stay exact; the others are evaluated with
    `settings.decimal_precision` digits before rounding.
    """
    if drone_speed <= 0:
        raise MalformedRequest(f"drone speed must be positive, got {drone_speed}")
    step = quantum or settings.quantum
    with localcontext() as ctx:
        ctx.prec = settings.decimal_precision
        return _flight_cost(_legs(takeoff, request), _legs(landing, request), drone_speed, step)


def is_valid(i: int, j: int, cost: Fraction, route: Route) -> bool:
    """
    A delivery from stop i to stop j is valid when the drone is not slower than the truck between them.

    Raises:
        OutOfOrder: i >= j
        MalformedRequest: an index outside the route
    """
    if i >= j:
        raise OutOfOrder(f"takeoff stop {i} must come before landing stop {j}", details={"i": i, "j": j})
    if i < 0 or j >= len(route.stops):
        raise MalformedRequest(f"stop pair ({i}, {j}) is outside a route of {len(route.stops)} stops")
    return cost <= route.stops[j].visit_time - route.stops[i].visit_time


def reachable_stops(route: Route, request: DeliveryRequest) -> list[int]:
    """Indices of the stops the truck has not passed yet when the request comes in."""
    return [index for index, stop in enumerate(route.stops) if stop.visit_time >= request.received_at]


def generate_interval(route: Route, request: DeliveryRequest, quantum: Fraction | None = None) -> GeneratedInterval:
    """
    Cheapest valid (takeoff, landing) pair among the stops not yet passed; ties go to the smallest takeoff
    index, then the smallest landing index.

    Raises:
        InvalidStopOrder: malformed route
        MalformedRequest: request received outside the route's time span
        NoFeasibleDelivery: fewer than two stops ahead, or no valid pair
    """
    check_route(route)
    first, last = route.stops[0].visit_time, route.stops[-1].visit_time
    if not first <= request.received_at <= last:
        raise MalformedRequest(
            f"request received at {request.received_at}, outside the route span [{first}, {last}]",
            details={"id": request.id},
        )
    ahead = reachable_stops(route, request)
    if len(ahead) < 2:
        raise NoFeasibleDelivery(
            f"only {len(ahead)} stop(s) left after {request.received_at}", details={"id": request.id}
        )

    step = quantum or settings.quantum
    best: GeneratedInterval | None = None
    with localcontext() as ctx:
        ctx.prec = settings.decimal_precision
        legs = {index: _legs(route.stops[index], request) for index in ahead}
        for position, i in enumerate(ahead):
            for j in ahead[position + 1 :]:
                cost = _flight_cost(legs[i], legs[j], route.drone_speed, step)
                if not is_valid(i, j, cost, route):
                    continue
                if best is None or cost < best.cost:
                    best = GeneratedInterval(
                        takeoff_index=i,
                        landing_index=j,
                        left=route.stops[i].visit_time,
                        right=route.stops[j].visit_time,
                        cost=cost,
                    )
    if best is None:
        raise NoFeasibleDelivery(
            f"no stop pair reaches ({request.x}, {request.y}) in time", details={"id": request.id}
        )
    return best


def stream_generate(
    route: Route,
    requests: Sequence[DeliveryRequest],
    quantum: Fraction | None = None,
    epsilon: Fraction | None = None,
) -> GenerationBatch:
    """
    Generates the interval of every request, in order, and shrinks shared endpoints apart.

    Unservable requests are reported in `rejected` instead of failing the batch, as are intervals whose
    slack does not survive the endpoint perturbation.

    Raises:
        OutOfOrder: requests not sorted by `received_at`
        InvalidStopOrder: malformed route
        EpsilonTooLarge: the given epsilon would reorder endpoints
    """
    check_route(route)
    for index, (before, after) in enumerate(zip(requests, requests[1:]), start=1):
        if after.received_at < before.received_at:
            raise OutOfOrder(
                f"request {index} received at {after.received_at}, before request {index - 1}",
                details={"index": index},
            )

    intervals: list[Interval] = []
    indices: list[int] = []
    rejected: list[RejectedRequest] = []
    last_arrival: Fraction | None = None
    for index, request in enumerate(requests, start=1):
        request_id = request.id or f"q{index}"
        # the scheduler accepts one request per time step
        if last_arrival is not None and request.received_at == last_arrival:
            rejected.append(RejectedRequest(index=index, id=request_id, reason="time-step"))
            continue
        try:
            generated = generate_interval(route, request, quantum)
        except (NoFeasibleDelivery, MalformedRequest) as exc:
            rejected.append(RejectedRequest(index=index, id=request_id, reason=exc.message))
            continue
        intervals.append(
            Interval(
                id=request_id,
                arrival=request.received_at,
                left=generated.left,
                right=generated.right,
                cost=generated.cost,
            )
        )
        indices.append(index)
        last_arrival = request.received_at

    if has_shared_endpoints(intervals):
        gap_epsilon = default_epsilon(intervals)
        assert gap_epsilon is not None
        # small against the cost grid, so the shrinking rarely eats the slack of a valid pair
        step = epsilon or settings.epsilon or min(gap_epsilon, (quantum or settings.quantum) / 4)
        intervals = normalize_endpoints(intervals, step)
        kept: list[Interval] = []
        for index, interval in zip(indices, intervals):
            if interval.cost > interval.length:
                rejected.append(RejectedRequest(index=index, id=interval.id, reason="perturbation"))
            else:
                kept.append(interval)
        intervals = kept

    rejected.sort(key=lambda record: record.index)
    if rejected:
        L.warning(f"{len(rejected)} of {len(requests)} requests could not be turned into intervals")
    return GenerationBatch(intervals=tuple(intervals), rejected=tuple(rejected))
