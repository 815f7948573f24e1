"""Timing harness for the bull-free odd-hole driver."""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from .driver import DetectOptions, InputNotBullFree, detect_odd_hole_bullfree
from .generators import GenSpec, gen_bullfree, substitute
from .graph import bull_graph, complete_graph, cycle_graph, petersen_graph

# the triple scan checks cross edges between the two paths pairwise
TRIPLE_CHECK_NOTE = "triple verification: O(L^2) pairwise cross-edge check per triple"


@dataclass
class BenchReport:
    sizes: list[int]
    medians: list[float]
    slope: float
    times: dict[int, list[float]] = field(default_factory=dict)
    yes: dict[int, int] = field(default_factory=dict)
    notes: list[str] = field(default_factory=list)

    def lines(self) -> list[str]:
        out = [f"{'n':>6} {'median_s':>12} {'yes':>5}"]
        for n, med in zip(self.sizes, self.medians):
            out.append(f"{n:>6} {med:>12.6f} {self.yes.get(n, 0):>5}")
        out.append(f"slope {self.slope:.3f}")
        out += [f"note: {note}" for note in self.notes]
        return out


def bench_seed(seed: int, size: int, trial: int) -> int:
    return (seed * 1_000_003 + size * 7_919 + trial) % 2**64


def fit_slope(sizes: Sequence[int], times: Sequence[float]) -> float:
    """Least-squares slope of log(time) against log(n)."""
    x = np.log(np.asarray(sizes, dtype=float))
    y = np.log(np.maximum(np.asarray(times, dtype=float), 1e-9))
    return float(np.polyfit(x, y, 1)[0])


def _warm_up() -> None:
    """Compile every kernel (C5 hit, split, base case, bull rejection)
    before anything is timed."""
    for g in (petersen_graph(), substitute(cycle_graph(7), 0, complete_graph(2)), bull_graph()):
        try:
            detect_odd_hole_bullfree(g)
        except InputNotBullFree:
            pass


def run_bench(
    sizes: Sequence[int],
    seed: int = 0,
    trials: int = 5,
    density: float = 0.5,
    verify_bull_free: bool = True,
) -> BenchReport:
    """Median wall time of detection (generation excluded) per size."""
    opts = DetectOptions(verify_bull_free=verify_bull_free)
    _warm_up()
    times: dict[int, list[float]] = {}
    yes: dict[int, int] = {}
    for size in sizes:
        times[size] = []
        yes[size] = 0
        for trial in range(trials):
            g = gen_bullfree(GenSpec(seed=bench_seed(seed, size, trial), n=size, density=density))
            t0 = time.perf_counter()
            verdict = detect_odd_hole_bullfree(g, opts)
            times[size].append(time.perf_counter() - t0)
            yes[size] += verdict.found
    medians = [float(np.median(times[s])) for s in sizes]
    slope = fit_slope(sizes, medians) if len(sizes) >= 2 else float("nan")
    notes = [TRIPLE_CHECK_NOTE]
    if not verify_bull_free:
        notes.append("bull-freeness verification disabled")
    return BenchReport(list(sizes), medians, slope, times, yes, notes)
