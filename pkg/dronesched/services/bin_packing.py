"""
Module: bin_packing.py

Second color component: which drone (bin) of an idNumber serves a request, under next-fit or first-fit
"""

from dataclasses import dataclass, field
from fractions import Fraction

import pandas as pd
from loguru import logger as L

from dronesched.exceptions import InfeasibleRequest, MalformedRequest
from dronesched.models.reports import PlacementRecord
from dronesched.utils.max_tree import MaxRemTree


@dataclass
class NextFitState:
    """
    One active bin per idNumber: its number and remaining capacity.
    """

    budget: Fraction
    id_to_bin: dict[int, int] = field(default_factory=dict)
    bin_to_capacity: dict[int, Fraction] = field(default_factory=dict)


@dataclass
class FirstFitTree:
    """
    Open bins of every idNumber in a max-augmented search tree, plus the count of bins ever created per id.

    Bins whose remaining capacity reaches zero are removed from the tree; their numbers are never reused.
    """

    budget: Fraction
    trees: dict[int, MaxRemTree] = field(default_factory=dict)
    g_bin_number: dict[int, int] = field(default_factory=dict)


@dataclass
class PlacementTrace:
    """Append-only log of placements, used for audits."""

    records: list[PlacementRecord] = field(default_factory=list)

    def append(self, record: PlacementRecord) -> None:
        self.records.append(record)

    def __len__(self) -> int:
        return len(self.records)

    def loads(self) -> dict[tuple[int, int], Fraction]:
        """Total cost routed to each (idNumber, binNumber)."""
        totals: dict[tuple[int, int], Fraction] = {}
        for record in self.records:
            key = (record.id_number, record.bin_number)
            totals[key] = totals.get(key, Fraction(0)) + record.cost
        return totals

    def to_frame(self) -> pd.DataFrame:
        return pd.DataFrame(
            [
                {
                    "id_number": record.id_number,
                    "cost": str(record.cost),
                    "bin_number": record.bin_number,
                    "opened": record.opened,
                    "candidates": ";".join(f"{bin_number}:{rem}" for bin_number, rem in record.candidates),
                }
                for record in self.records
            ],
            columns=["id_number", "cost", "bin_number", "opened", "candidates"],
        )


def check_cost(cost: Fraction, budget: Fraction, request_id: str = "?") -> None:
    if cost <= 0:
        raise MalformedRequest(f"Request {request_id!r} has non-positive cost {cost}")
    if cost > budget:
        raise InfeasibleRequest(request_id, cost, budget)


def nextfit_place(state: NextFitState, id_number: int, cost: Fraction, trace: PlacementTrace | None = None) -> int:
    """
    Places an item in the active bin of `id_number`, closing it and opening the next one if it does not fit.

    Returns:
        The bin number (numbered from 1 per idNumber)
    """
    check_cost(cost, state.budget)
    active = state.id_to_bin.get(id_number)
    remaining = state.bin_to_capacity.get(id_number)
    candidates = ((active, remaining),) if trace is not None and active is not None else ()

    if active is not None and remaining is not None and remaining >= cost:
        bin_number = active
        state.bin_to_capacity[id_number] = remaining - cost
        opened = False
    else:
        bin_number = 1 if active is None else active + 1
        state.id_to_bin[id_number] = bin_number
        state.bin_to_capacity[id_number] = state.budget - cost
        opened = True
        L.debug(f"next-fit: idNumber {id_number} opens bin {bin_number}")

    if trace is not None:
        trace.append(
            PlacementRecord(
                id_number=id_number, cost=cost, bin_number=bin_number, opened=opened, candidates=candidates
            )
        )
    return bin_number


def firstfit_place(tree: FirstFitTree, id_number: int, cost: Fraction, trace: PlacementTrace | None = None) -> int:
    """
    Places an item in the lowest-numbered open bin of `id_number` with enough room, or in a new bin.

    A bin left with zero capacity is closed (removed from the tree) right away.

    Returns:
        The bin number (numbered from 1 per idNumber, never reused)
    """
    check_cost(cost, tree.budget)
    bins = tree.trees.get(id_number)
    if bins is None:
        bins = tree.trees[id_number] = MaxRemTree()
    candidates = tuple(bins.items()) if trace is not None else ()

    placed = bins.first_fit(cost)
    if placed is None:
        bin_number = tree.g_bin_number.get(id_number, 0) + 1
        tree.g_bin_number[id_number] = bin_number
        remaining = tree.budget - cost
        if remaining > 0:
            bins.insert(bin_number, remaining)
        opened = True
        L.debug(f"first-fit: idNumber {id_number} opens bin {bin_number}")
    else:
        bin_number, remaining = placed
        if remaining == 0:
            bins.delete(bin_number)
        opened = False

    if trace is not None:
        trace.append(
            PlacementRecord(
                id_number=id_number, cost=cost, bin_number=bin_number, opened=opened, candidates=candidates
            )
        )
    return bin_number


def close_zero_bins(tree: FirstFitTree) -> None:
    """Removes every open bin whose remaining capacity is zero."""
    for id_number, bins in tree.trees.items():
        for bin_number in [bin_number for bin_number, rem in bins.items() if rem == 0]:
            bins.delete(bin_number)
            L.debug(f"first-fit: idNumber {id_number} closes bin {bin_number}")
