"""
Model module defining run reports, traces, oracle results and harness metrics
"""

from fractions import Fraction

from pydantic import Field, NonNegativeInt, PositiveInt

from dronesched.models.common import ExactModel, NonNegativeRational, PositiveRational, Rational
from dronesched.models.enums import EventKind, Strategy
from dronesched.models.intervals import Color


class PlacementRecord(ExactModel):
    """
    One bin placement: the candidate bins of the idNumber with their remaining capacity before the placement
    """

    id_number: PositiveInt
    cost: PositiveRational
    bin_number: PositiveInt
    opened: bool
    candidates: tuple[tuple[int, Rational], ...] = ()


class EventOutcome(ExactModel):
    """
    What one scheduler update did
    """

    time: Rational
    kind: EventKind
    request_id: str | None = None
    color: Color | None = None


class DroneUsage(ExactModel):
    """
    One drone (one distinct color) of a run
    """

    color: Color
    load: NonNegativeRational
    served: tuple[str, ...]


class ScheduleReport(ExactModel):
    """
    Output of an online scheduling run
    """

    strategy: Strategy
    budget: PositiveRational
    epsilon: Rational | None = None
    colors: dict[str, Color]
    drone_count: NonNegativeInt
    g_id_number: NonNegativeInt
    drones: tuple[DroneUsage, ...]


class CompetitiveCertificate(ExactModel):
    """
    Quantities of the next-fit competitive argument, computed from a finished run.

    `bins_per_id[i]` is L_i, `cost_per_id[i]` the total cost routed to idNumber i;
    next-fit guarantees alg <= chain_bound = 2 * volume_bound + g.
    """

    bins_per_id: dict[int, int]
    cost_per_id: dict[int, Rational]
    g: NonNegativeInt
    alg: NonNegativeInt
    volume_bound: NonNegativeRational
    chain_bound: NonNegativeRational


class OvdsDrone(ExactModel):
    """
    A drone drawn from the source during an OVDS run
    """

    color: Color
    capacity: PositiveRational
    load: NonNegativeRational
    served: tuple[str, ...]


class OvdsReport(ExactModel):
    """
    Output of the offline-requests / online-drones scheduler
    """

    colors: dict[str, Color]
    total_drones: NonNegativeInt
    g: NonNegativeInt
    lists: tuple[tuple[str, ...], ...]
    drones: tuple[OvdsDrone, ...]
    alpha: Rational
    total_cost: NonNegativeRational

    @property
    def capacities(self) -> list[Fraction]:
        return [drone.capacity for drone in self.drones]


class OracleResult(ExactModel):
    """
    A ground-truth value and the object realizing it.

    The witness depends on the oracle: a clique (ids and a common point), a coloring, or a grouping.
    """

    value: NonNegativeInt
    clique: tuple[str, ...] | None = None
    point: Rational | None = None
    coloring: dict[str, int] | None = None
    groups: tuple[tuple[str, ...], ...] | None = None


class OracleSummary(ExactModel):
    """
    Oracle command output
    """

    clique_number: NonNegativeInt
    lower_bound: NonNegativeInt
    exact: OracleResult | None = None


class GenSpec(ExactModel):
    """
    Recipe for a reproducible random instance
    """

    n: NonNegativeInt
    horizon: PositiveRational
    min_len: PositiveRational
    max_len: PositiveRational
    budget: PositiveRational
    seed: int = 0
    max_overlap: PositiveInt | None = None
    grid: PositiveInt = Field(default=1000, description="time ticks per time unit")


class RunMetrics(ExactModel):
    """
    Metrics of one strategy on one instance
    """

    strategy: Strategy
    drone_count: NonNegativeInt
    oracle_value: NonNegativeInt
    oracle_exact: bool
    ratio: float
    g_id_number: NonNegativeInt
    peak_live: NonNegativeInt
    latency_ns: dict[str, float] | None = None


class StrategyComparison(ExactModel):
    """
    Next-fit and first-fit on the same instance
    """

    next_fit: RunMetrics
    first_fit: RunMetrics
