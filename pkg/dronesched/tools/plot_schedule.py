"""
Module: plot_schedule.py

Gantt chart of a schedule: one row per drone, one bar per served request
"""

from collections.abc import Sequence

import matplotlib.pyplot as plt

from dronesched.models.intervals import Interval
from dronesched.models.reports import ScheduleReport
from dronesched.tools.figures import figure_to_png


def plot_schedule(report: ScheduleReport, intervals: Sequence[Interval]):
    """Plots the drones of a report against time"""
    by_id = {interval.id: interval for interval in intervals}
    rows = max(len(report.drones), 1)
    fontsize = 10

    fig, ax = plt.subplots(figsize=(8, 1 + 0.4 * rows))
    cmap = plt.get_cmap("tab10")
    for row, drone in enumerate(report.drones):
        spans = [
            (float(by_id[request_id].left), float(by_id[request_id].length))
            for request_id in drone.served
            if request_id in by_id
        ]
        ax.broken_barh(spans, (row - 0.4, 0.8), color=cmap(drone.color.id_number % 10), edgecolor="black")

    ax.set_yticks(range(len(report.drones)))
    ax.set_yticklabels(
        [f"({drone.color.id_number}, {drone.color.bin_number})" for drone in report.drones], fontsize=fontsize
    )
    ax.set_xlabel("time", fontsize=fontsize)
    ax.set_ylabel("drone (idNumber, binNumber)", fontsize=fontsize)
    ax.set_title(f"{report.strategy}: {report.drone_count} drones, B = {report.budget}", fontsize=fontsize)
    ax.invert_yaxis()

    figure = fig.figure
    figure.set_layout_engine("tight")
    return figure


def render_schedule(report: ScheduleReport, intervals: Sequence[Interval], dpi: int | None = None) -> bytes:
    """PNG bytes of the schedule chart"""
    return figure_to_png(plot_schedule(report, intervals), dpi)
