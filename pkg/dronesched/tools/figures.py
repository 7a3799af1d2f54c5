"""Shared helpers for the matplotlib renderers."""

import io

import matplotlib.pyplot as plt
from matplotlib.figure import Figure


def figure_to_png(fig: Figure, dpi: int | None) -> bytes:
    """
    Renders a figure to PNG bytes and releases it.

    Args:
        fig: the matplotlib figure
        dpi: optional dots per inch of the image
    Returns:
        The PNG image in bytes
    """
    buffer = io.BytesIO()
    try:
        fig.savefig(buffer, dpi=dpi, format="png")
    finally:
        # figures are kept alive by pyplot until closed
        plt.close(fig)
    return buffer.getvalue()
