"""Figures written next to the delimited reports."""

from __future__ import annotations

from pathlib import Path

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402

FIGSIZE = (5.5, 3.6)
DPI = 150


def _finish(fig, path: Path) -> Path:
    fig.tight_layout()
    fig.savefig(path, dpi=DPI)
    plt.close(fig)
    return path


def plot_layers(measured: list[int], moore: list[int], title: str, path: Path) -> Path:
    """Vertices per distance from one root against the Moore tree layers."""
    fig, ax = plt.subplots(figsize=FIGSIZE)
    xs = range(len(moore))
    ax.bar([x - 0.2 for x in xs], moore, width=0.4, label="Moore layer bound", color="0.7")
    ax.bar([x + 0.2 for x in range(len(measured))], measured, width=0.4,
           label="measured", color="tab:blue")
    ax.set_xlabel("distance from root")
    ax.set_ylabel("vertices")
    ax.set_title(title)
    ax.legend(frameon=False)
    return _finish(fig, path)


def plot_ratio_trend(rows, path: Path) -> Path:
    """Moore-bound / order ratio of reduced graphs against (1 + r'/d)^k."""
    fig, ax = plt.subplots(figsize=FIGSIZE)
    ds = [r.d for r in rows]
    ax.plot(ds, [float(r.ratio) for r in rows], "o-", label="Moore bound / order")
    ax.plot(ds, [float(r.target) for r in rows], "s--", label=r"$(1+1/d)^{k'}$")
    ax.set_xscale("log", base=2)
    ax.set_xlabel("d")
    ax.set_ylabel("ratio")
    ax.legend(frameon=False)
    return _finish(fig, path)


def plot_moore_growth(rows: dict[str, list[int]], ks: list[int], path: Path) -> Path:
    fig, ax = plt.subplots(figsize=FIGSIZE)
    for name, vals in rows.items():
        ax.plot(ks, vals, "o-", label=name)
    ax.set_yscale("log")
    ax.set_xlabel("diameter k")
    ax.set_ylabel("Moore bound")
    ax.legend(frameon=False, fontsize=8)
    return _finish(fig, path)
