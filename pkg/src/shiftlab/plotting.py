"""Figures written next to CLI reports.  Uses the non-interactive Agg backend."""

from __future__ import annotations

from pathlib import Path
from typing import Mapping, Sequence

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402

from .graph import Graph, MProfile  # noqa: E402

STYLES = {
    "exterior": dict(color="#1f77b4", marker="o", linestyle="-"),
    "symmetric": dict(color="#d62728", marker="s", linestyle="--"),
    "combinatorial": dict(color="#2ca02c", marker="^", linestyle=":"),
    "chordal-algo": dict(color="#9467bd", marker="v", linestyle="-."),
}


def _finish(fig, path: str | Path) -> Path:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    fig.tight_layout()
    fig.savefig(path, dpi=120)
    plt.close(fig)
    return path


def plot_profiles(profiles: Mapping[str, MProfile], path: str | Path, title: str = "") -> Path:
    """Staircase of m_{<=k} against k, one line per method."""
    fig, ax = plt.subplots(figsize=(6, 4))
    for name, prof in profiles.items():
        ks = list(range(1, len(prof.cum) + 1))
        style = STYLES.get(name, {})
        ax.step(ks, prof.cum, where="post", label=name, **style)
    ax.set_xlabel("k")
    ax.set_ylabel(r"$m_{\leq k}$")
    ax.set_title(title or "cumulative edge profile")
    ax.grid(alpha=0.3)
    ax.legend(loc="lower right")
    return _finish(fig, path)


def plot_adjacency(graphs: Mapping[str, Graph], path: str | Path) -> Path:
    """Upper-triangular adjacency pictures side by side."""
    names = list(graphs)
    fig, axes = plt.subplots(1, len(names), figsize=(3.2 * len(names), 3.2), squeeze=False)
    for ax, name in zip(axes[0], names):
        g = graphs[name]
        grid = [[0] * g.n for _ in range(g.n)]
        for i, j in g.edges:
            grid[i - 1][j - 1] = 1
        ax.imshow(grid, cmap="Greys", vmin=0, vmax=1)
        ticks = list(range(g.n))
        ax.set_xticks(ticks, [str(t + 1) for t in ticks], fontsize=7)
        ax.set_yticks(ticks, [str(t + 1) for t in ticks], fontsize=7)
        ax.set_title(f"{name} ({g.num_edges} edges)", fontsize=9)
    return _finish(fig, path)


def plot_verify_summary(rows: Sequence[Mapping], path: str | Path) -> Path:
    """Horizontal bars of passed/failed counts per check."""
    names = [r["check"] for r in rows]
    passed = [r["passed"] for r in rows]
    failed = [r["failed"] for r in rows]
    fig, ax = plt.subplots(figsize=(7, 0.4 * len(rows) + 1.2))
    ys = range(len(rows))
    ax.barh(ys, passed, color="#2ca02c", label="passed")
    ax.barh(ys, failed, left=passed, color="#d62728", label="failed")
    ax.set_yticks(list(ys), names, fontsize=8)
    ax.invert_yaxis()
    ax.set_xlabel("cases")
    ax.legend(loc="lower right", fontsize=8)
    return _finish(fig, path)
