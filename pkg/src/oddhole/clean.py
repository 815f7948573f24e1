"""Odd-hole detection for graphs whose shortest odd holes are clean.

For a clean shortest odd hole C, pick any vertex y of C and the edge x1x2
of C opposite to it. Shortest paths from y to x1 and to x2 then close up
into a shortest odd hole, whichever shortest paths are chosen. The scan
below tries every (y, x1x2) with canonical BFS paths and keeps only triples
whose union is verified to be an induced odd cycle, so a hit is always a
genuine odd hole even when the cleanliness assumption fails.
"""

from __future__ import annotations

from typing import Optional, Sequence

import numpy as np

from . import _kernels
from .graph import Graph, is_induced_cycle


def _csr(g: Graph) -> tuple[np.ndarray, np.ndarray]:
    nbrs = g.neighbors
    ptr = np.zeros(g.n + 1, dtype=np.int64)
    ptr[1:] = np.cumsum([len(row) for row in nbrs])
    idx = np.fromiter((w for row in nbrs for w in row), dtype=np.int64, count=int(ptr[-1]))
    return ptr, idx


def bfs_tables(g: Graph) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """(dist, parent, branch) for every source; see :func:`_kernels.bfs_tables`."""
    ptr, idx = _csr(g)
    return _kernels.bfs_tables(ptr, idx, g.n)


def canonical_shortest_path(g: Graph, u: int, v: int, tables=None) -> Optional[list[int]]:
    """Shortest u-v path; each step back from v goes to its least-index
    neighbour one level closer to u."""
    if u == v:
        raise ValueError("canonical_shortest_path needs two distinct vertices")
    dist, parent, _ = tables if tables is not None else bfs_tables(g)
    if dist[u, v] < 0:
        return None
    path = [v]
    while path[-1] != u:
        path.append(int(parent[u, path[-1]]))
    return [int(x) for x in reversed(path)]


def verify_odd_hole(g: Graph, seq: Sequence[int]) -> bool:
    """True iff ``seq`` is an induced cycle of ``g`` of odd length at least 5."""
    try:
        k = len(seq)
    except TypeError:
        return False
    return k >= 5 and k % 2 == 1 and is_induced_cycle(g, seq)


def detect_clean_shortest_odd_hole(g: Graph) -> Optional[list[int]]:
    """Return an odd hole found by the triple scan, or None.

    Triples are visited with y ascending, then edges (x1 < x2) in
    lexicographic order; the first verified cycle is returned.
    """
    n = g.n
    if n < 5:
        return None
    tables = bfs_tables(g)
    dist, parent, branch = tables
    edges = np.array(g.edges(), dtype=np.int64).reshape(-1, 2)
    cyc = _kernels.triple_scan(g.adj, dist, parent, branch, edges[:, 0].copy(), edges[:, 1].copy(), n)
    if cyc.size == 0:
        return None
    hole = [int(v) for v in cyc]
    if not verify_odd_hole(g, hole):
        raise AssertionError(f"triple scan produced an invalid hole {hole}")
    return hole
