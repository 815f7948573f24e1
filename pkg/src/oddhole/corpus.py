"""Reproducible graph corpora used by the theorem checks and the test suite."""

from __future__ import annotations

from itertools import combinations
from typing import Iterator

import numpy as np

from .generators import (
    GenSpec,
    Stream,
    gen_bullfree,
    gen_jewel,
    gen_planted_odd_hole,
    gen_pyramid,
    substitute,
    _er,
)
from .graph import Graph, cycle_graph
from .patterns import find_bull


def all_labeled_graphs(n: int) -> Iterator[Graph]:
    """Every labelled graph on ``n`` vertices; edge mask bit i is the i-th
    pair of ``combinations(range(n), 2)``."""
    pairs = list(combinations(range(n), 2))
    if not pairs:
        yield Graph(np.zeros((n, n), dtype=bool))
        return
    iu = np.array([p[0] for p in pairs])
    ju = np.array([p[1] for p in pairs])
    shifts = np.arange(len(pairs))
    chunk = 4096
    total = 1 << len(pairs)
    for lo in range(0, total, chunk):
        masks = np.arange(lo, min(total, lo + chunk))
        bits = ((masks[:, None] >> shifts) & 1).astype(bool)
        adj = np.zeros((masks.size, n, n), dtype=bool)
        adj[:, iu, ju] = bits
        adj[:, ju, iu] = bits
        for a in adj:
            yield Graph(a)


def exhaustive_bullfree(max_n: int = 6) -> Iterator[Graph]:
    for n in range(max_n + 1):
        for g in all_labeled_graphs(n):
            if find_bull(g) is None:
                yield g


def random_bullfree(count: int, seed: int, n_min: int = 7, n_max: int = 14) -> Iterator[Graph]:
    """Bull-free graphs with sizes, densities and base sizes varied per instance."""
    rng = Stream(seed)
    for i in range(count):
        n = n_min + rng.below(n_max - n_min + 1)
        density = 0.15 + 0.7 * rng.uniform()
        base_size = 3 + rng.below(n - 2)
        piece_max = 2 + rng.below(4)
        yield gen_bullfree(
            GenSpec(seed=seed * 100_003 + i, n=n, density=density, base_size=base_size, piece_max=piece_max)
        )


def planted(count: int, seed: int, n_max: int = 14) -> Iterator[Graph]:
    rng = Stream(seed)
    for i in range(count):
        k = (5, 7, 9, 11)[rng.below(4)]
        n = k + rng.below(n_max - k + 1)
        yield gen_planted_odd_hole(k, GenSpec(seed=seed * 100_003 + i, n=n, piece_max=2 + rng.below(3)))


def holes_with_attachments(count: int, seed: int, n_max: int = 14) -> Iterator[Graph]:
    """A long odd cycle plus extra vertices with random neighbourhoods,
    kept only when bull-free. Feeds the clean-hole check, which needs
    C5-free graphs that still have odd holes."""
    rng = Stream(seed)
    made = 0
    while made < count:
        k = (7, 9, 11)[rng.below(3)]
        extra = 1 + rng.below(n_max - k)
        n = k + extra
        adj = np.zeros((n, n), dtype=bool)
        adj[:k, :k] = cycle_graph(k).adj
        for v in range(k, n):
            # a run of consecutive cycle vertices, sometimes with a stray one
            start, run = rng.below(k), 1 + rng.below(4)
            for t in range(run):
                adj[v, (start + t) % k] = True
            if rng.chance(0.2):
                adj[v, rng.below(k)] = True
            for u in range(k, v):
                if rng.chance(0.4):
                    adj[v, u] = True
        g = Graph(adj | adj.T)
        if find_bull(g) is None:
            made += 1
            yield g


def jewels(count: int, seed: int) -> Iterator[Graph]:
    for i in range(count):
        yield gen_jewel(GenSpec(seed=seed * 100_003 + i, density=0.3))


def pyramids(count: int, seed: int) -> Iterator[Graph]:
    for i in range(count):
        yield gen_pyramid(GenSpec(seed=seed * 100_003 + i))


def homogeneous_pairs(count: int, seed: int, n_max: int = 14) -> Iterator[tuple[Graph, frozenset[int]]]:
    """(g, X): a random graph with one vertex replaced by a random piece;
    X is the piece, hence homogeneous. Half of the hosts are bull-free
    substitution graphs, half plain random graphs."""
    rng = Stream(seed)
    for i in range(count):
        size = 2 + rng.below(5)
        host_n = 2 + rng.below(n_max - size)
        if rng.chance(0.5):
            host = gen_bullfree(GenSpec(seed=seed * 100_003 + i, n=host_n, density=0.3 + 0.5 * rng.uniform()))
        else:
            host = _er(rng, host_n, 0.2 + 0.6 * rng.uniform())
        v = rng.below(host.n)
        piece = _er(rng, size, 0.2 + 0.6 * rng.uniform())
        g = substitute(host, v, piece)
        x = frozenset([v] + list(range(host.n, g.n)))
        yield g, x
