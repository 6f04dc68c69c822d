"""Timing harness for the linear-time spectrum path."""

from __future__ import annotations

import gc
import time
from dataclasses import asdict, dataclass
from typing import Sequence

from cospectra.oracle import random_cotree
from cospectra.spectrum import laplacian_spectrum


@dataclass(frozen=True)
class BenchRow:
    n: int
    trials: int
    mean_s: float
    min_s: float
    ns_per_leaf: float

    def as_dict(self) -> dict:
        return asdict(self)


def time_spectrum(n: int, trials: int = 3, seed: int = 0, join_bias: float = 0.5) -> BenchRow:
    """Mean wall time of :func:`laplacian_spectrum` over ``trials`` random cotrees.

    Tree generation is not timed.  The garbage collector is paused around
    each timed call, as :mod:`timeit` does.
    """
    if trials < 1:
        raise ValueError("trials must be >= 1")
    times = []
    for trial in range(trials):
        t = random_cotree(n, seed + trial, join_bias)
        was_enabled = gc.isenabled()
        gc.disable()
        try:
            start = time.perf_counter()
            laplacian_spectrum(t)
            times.append(time.perf_counter() - start)
        finally:
            if was_enabled:
                gc.enable()
    mean = sum(times) / len(times)
    return BenchRow(n, trials, mean, min(times), mean / n * 1e9)


def run_bench(sizes: Sequence[int], trials: int = 3, seed: int = 0, join_bias: float = 0.5) -> list:
    return [time_spectrum(n, trials, seed, join_bias) for n in sizes]


def linearity_ratio(rows: Sequence[BenchRow]) -> float:
    """ns/leaf at the largest size divided by ns/leaf at the smallest."""
    lo = min(rows, key=lambda r: r.n)
    hi = max(rows, key=lambda r: r.n)
    return hi.ns_per_leaf / lo.ns_per_leaf


def format_rows(rows: Sequence[BenchRow]) -> str:
    lines = ["n\ttrials\tmean_s\tmin_s\tns_per_leaf"]
    for r in rows:
        lines.append(f"{r.n}\t{r.trials}\t{r.mean_s:.6f}\t{r.min_s:.6f}\t{r.ns_per_leaf:.1f}")
    lines.append(f"linearity_ratio\t{linearity_ratio(rows):.3f}")
    return "\n".join(lines)
