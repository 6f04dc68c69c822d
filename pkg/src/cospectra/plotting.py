"""Matplotlib figures written next to the tabular CLI output."""

from __future__ import annotations

from pathlib import Path
from typing import Sequence

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402


def _finish(fig, path) -> Path:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
    return path


def plot_bench(rows: Sequence, path) -> Path:
    """Two panels: wall time vs n (log-log) and ns/leaf vs n."""
    ns = [r.n for r in rows]
    fig, (left, right) = plt.subplots(1, 2, figsize=(9, 3.6))
    left.loglog(ns, [r.mean_s for r in rows], "o-", label="mean")
    left.loglog(ns, [r.min_s for r in rows], "s--", alpha=0.6, label="min")
    ref = rows[0].mean_s / ns[0]
    left.loglog(ns, [ref * n for n in ns], ":", color="grey", label="linear")
    left.set_xlabel("leaves n")
    left.set_ylabel("seconds")
    left.legend(frameon=False)
    right.semilogx(ns, [r.ns_per_leaf for r in rows], "o-")
    right.set_ylim(bottom=0)
    right.set_xlabel("leaves n")
    right.set_ylabel("ns / leaf")
    return _finish(fig, path)


def plot_spectrum(spectrum, path) -> Path:
    """Bar chart of eigenvalue multiplicities."""
    fig, ax = plt.subplots(figsize=(6, 3.2))
    values = [v for v, _ in spectrum.pairs]
    ax.bar(values, [m for _, m in spectrum.pairs], width=0.6)
    ax.set_xlabel("Laplacian eigenvalue")
    ax.set_ylabel("multiplicity")
    ax.set_title(f"n = {spectrum.n}")
    if len(values) <= 30:
        ax.set_xticks(values)
    return _finish(fig, path)
