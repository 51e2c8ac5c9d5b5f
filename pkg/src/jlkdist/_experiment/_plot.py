"""Static SVG plots of persistence diagrams."""

from __future__ import annotations

import logging
from pathlib import Path
from typing import TYPE_CHECKING

import matplotlib as mpl
import numpy as np
from matplotlib.figure import Figure

if TYPE_CHECKING:
    from collections.abc import Sequence

    from jlkdist._persistence import PersistenceDiagram

_logger = logging.getLogger(__name__)


def plot_diagram(
    diagram: PersistenceDiagram, beta: float, cap: float, title: str
) -> Figure:
    """Scatter plot of a diagram with the diagonal and the ``beta`` band.

    Points below the dashed line ``death = beta**2 * birth`` are within
    log-scale distance ``ln(beta)`` of the diagonal. Essential classes are drawn
    as triangles at ``cap``.
    """
    fig = Figure(figsize=(4.5, 4.5))
    ax = fig.add_subplot()
    finite = np.array([[p.birth, p.death] for p in diagram.finite]).reshape(-1, 2)
    essential = np.array([p.birth for p in diagram.essential])
    top = max(cap, float(finite.max(initial=0.0))) * 1.05
    grid = np.array([0.0, top])
    ax.plot(grid, grid, color="black", linewidth=0.8)
    ax.plot(grid, beta**2 * grid, color="gray", linestyle="--", linewidth=0.8)
    ax.axhline(cap, color="gray", linestyle=":", linewidth=0.8)
    ax.scatter(finite[:, 0], finite[:, 1], s=14, color="tab:blue", zorder=3)
    ax.scatter(
        essential,
        np.full(essential.size, cap),
        s=24,
        marker="^",
        color="tab:red",
        zorder=3,
    )
    ax.set_xlim(0.0, top)
    ax.set_ylim(0.0, top)
    ax.set_aspect("equal")
    ax.set_xlabel("birth")
    ax.set_ylabel("death")
    ax.set_title(title)
    return fig


def write_diagram_svgs(
    before: Sequence[PersistenceDiagram],
    after: Sequence[PersistenceDiagram],
    directory: Path | str,
    beta: float,
    cap: float,
) -> list[Path]:
    """Write ``h<degree>_before.svg`` and ``h<degree>_after.svg`` per degree.

    The files do not embed a date, so identical diagrams give identical files.
    """
    directory = Path(directory)
    directory.mkdir(parents=True, exist_ok=True)
    written = []
    with mpl.rc_context({"svg.hashsalt": "jlkdist", "svg.fonttype": "path"}):
        for side, diagrams in (("before", before), ("after", after)):
            for diagram in diagrams:
                fig = plot_diagram(
                    diagram,
                    beta,
                    cap,
                    f"H{diagram.dimension} {side} projection",
                )
                path = directory / f"h{diagram.dimension}_{side}.svg"
                fig.savefig(path, format="svg", metadata={"Date": None})
                written.append(path)
    _logger.debug("Wrote %i diagram plots to %s.", len(written), directory)
    return written
