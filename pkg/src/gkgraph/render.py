"""Matplotlib rendering of prime graphs to image files.

Layout mirrors the way these graphs are usually drawn: each connected
component sits on its own small circle, components side by side, so the
disconnectedness that drives the whole theory is visible at a glance.
"""

from __future__ import annotations

import math
from pathlib import Path

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt

from .graphs import PrimeGraph, components


def _component_layout(g: PrimeGraph) -> dict[int, tuple[float, float]]:
    pos: dict[int, tuple[float, float]] = {}
    x_offset = 0.0
    for comp in components(g).components:
        n = len(comp)
        radius = 0.0 if n == 1 else 0.45 + 0.08 * n
        cx = x_offset + radius + 0.6
        for i, v in enumerate(comp):
            angle = 2 * math.pi * i / max(n, 1) + math.pi / 2
            pos[v] = (cx + radius * math.cos(angle), radius * math.sin(angle))
        x_offset = cx + radius + 0.6
    return pos


def draw_graph(g: PrimeGraph, ax=None, title: str | None = None):
    """Draw the graph onto an axes (a new figure when none is given)."""
    if ax is None:
        width = max(3.0, 1.4 * max(1, components(g).count) + 0.35 * len(g.vertices))
        _, ax = plt.subplots(figsize=(width, 3.2))
    pos = _component_layout(g)
    for r, s in g.edge_list():
        (x1, y1), (x2, y2) = pos[r], pos[s]
        ax.plot([x1, x2], [y1, y2], color="0.35", linewidth=1.2, zorder=1)
    for v, (x, y) in pos.items():
        ax.scatter([x], [y], s=660, color="white", edgecolors="black", zorder=2)
        ax.annotate(str(v), (x, y), ha="center", va="center", fontsize=9, zorder=3)
    ax.set_title(title if title is not None else g.name)
    ax.set_aspect("equal")
    ax.axis("off")
    return ax


def save_graph_figure(g: PrimeGraph, path: str | Path, title: str | None = None) -> Path:
    """Render the graph to an image file and return the path."""
    path = Path(path)
    ax = draw_graph(g, title=title)
    fig = ax.figure
    fig.tight_layout()
    path.parent.mkdir(parents=True, exist_ok=True)
    fig.savefig(path, dpi=150)
    plt.close(fig)
    return path
