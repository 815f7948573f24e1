"""Immutable simple undirected graphs on vertices ``0..n-1``."""

from __future__ import annotations

from collections import deque
from functools import cached_property
from typing import Iterable, Sequence

import numpy as np

INF = -1  # sentinel for unreachable vertices in distance arrays


class GraphError(ValueError):
    """Raised when a graph cannot be constructed from the given data."""


class Graph:
    """A finite simple graph with dense integer vertices.

    Adjacency is held as a read-only boolean matrix (pair lookup) and as
    sorted neighbour tuples. A packed ``uint64`` bit matrix is built on
    demand for the enumeration kernels.
    """

    __slots__ = ("_adj", "__dict__")

    def __init__(self, adj: np.ndarray):
        adj = np.array(adj, dtype=bool, copy=True)
        if adj.ndim != 2 or adj.shape[0] != adj.shape[1]:
            raise GraphError(f"adjacency matrix must be square, got shape {adj.shape}")
        if adj.diagonal().any():
            v = int(np.flatnonzero(adj.diagonal())[0])
            raise GraphError(f"self-loop at vertex {v}")
        if not np.array_equal(adj, adj.T):
            raise GraphError("adjacency matrix is not symmetric")
        adj.flags.writeable = False
        self._adj = adj

    @classmethod
    def from_edge_list(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        if n < 0:
            raise GraphError(f"vertex count must be non-negative, got {n}")
        adj = np.zeros((n, n), dtype=bool)
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge ({u}, {v}) has an endpoint outside 0..{n - 1}")
            if u == v:
                raise GraphError(f"edge ({u}, {v}) is a self-loop")
            adj[u, v] = adj[v, u] = True
        return cls(adj)

    @property
    def n(self) -> int:
        return self._adj.shape[0]

    @property
    def adj(self) -> np.ndarray:
        return self._adj

    def adjacent(self, u: int, v: int) -> bool:
        return bool(self._adj[u, v])

    @cached_property
    def neighbors(self) -> tuple[tuple[int, ...], ...]:
        return tuple(tuple(int(x) for x in np.flatnonzero(row)) for row in self._adj)

    @cached_property
    def bits(self) -> np.ndarray:
        """Rows of the adjacency matrix packed little-endian into uint64 words."""
        return pack_rows(self._adj)

    @property
    def words(self) -> int:
        return self.bits.shape[1]

    def edges(self) -> list[tuple[int, int]]:
        us, vs = np.nonzero(np.triu(self._adj, 1))
        return list(zip(us.tolist(), vs.tolist()))

    @property
    def m(self) -> int:
        return int(self._adj.sum()) // 2

    def degree(self, v: int) -> int:
        return len(self.neighbors[v])

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return np.array_equal(self._adj, other._adj)

    def __hash__(self) -> int:
        return hash((self.n, np.packbits(self._adj).tobytes()))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


def pack_rows(adj: np.ndarray) -> np.ndarray:
    rows, n = adj.shape
    words = max(1, (n + 63) // 64)
    padded = np.zeros((rows, words * 64), dtype=bool)
    padded[:, :n] = adj
    packed = np.packbits(padded, axis=1, bitorder="little")
    return np.ascontiguousarray(packed).view("<u8").astype(np.uint64)


def mask_bits(n: int, vertices: Iterable[int]) -> np.ndarray:
    """Pack a vertex set into the same word layout as :attr:`Graph.bits`."""
    row = np.zeros((1, n), dtype=bool)
    row[0, list(vertices)] = True
    return pack_rows(row)[0]


def from_edge_list(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    return Graph.from_edge_list(n, edges)


def complement(g: Graph) -> Graph:
    adj = ~g.adj
    np.fill_diagonal(adj, False)
    return Graph(adj)


def induced_subgraph(g: Graph, vertices: Iterable[int]) -> tuple[Graph, np.ndarray]:
    """Return ``G[S]`` and the map from new indices to old ones.

    New vertices are numbered in increasing order of their old index.
    """
    vmap = np.array(sorted(set(int(v) for v in vertices)), dtype=np.int64)
    if vmap.size and (vmap[0] < 0 or vmap[-1] >= g.n):
        raise GraphError(f"vertex set has elements outside 0..{g.n - 1}")
    return Graph(g.adj[np.ix_(vmap, vmap)]), vmap


def bfs_distances(g: Graph, source: int) -> np.ndarray:
    """Unweighted distances from ``source``; unreachable vertices get ``INF`` (-1)."""
    dist = np.full(g.n, INF, dtype=np.int64)
    dist[source] = 0
    queue = deque([source])
    nbrs = g.neighbors
    while queue:
        u = queue.popleft()
        for w in nbrs[u]:
            if dist[w] == INF:
                dist[w] = dist[u] + 1
                queue.append(w)
    return dist


def is_induced_cycle(g: Graph, seq: Sequence[int]) -> bool:
    """True iff ``seq`` lists the vertices of an induced cycle of ``g`` in order.

    Any length >= 3 is accepted; malformed input returns False.
    """
    try:
        seq = [int(v) for v in seq]
    except (TypeError, ValueError):
        return False
    k = len(seq)
    if k < 3 or len(set(seq)) != k or any(not 0 <= v < g.n for v in seq):
        return False
    sub = g.adj[np.ix_(seq, seq)]
    idx = np.arange(k)
    gap = np.abs(idx[:, None] - idx[None, :])
    expected = (gap == 1) | (gap == k - 1)
    return bool(np.array_equal(sub, expected))


def cycle_graph(k: int) -> Graph:
    return Graph.from_edge_list(k, [(i, (i + 1) % k) for i in range(k)])


def path_graph(k: int) -> Graph:
    return Graph.from_edge_list(k, [(i, i + 1) for i in range(k - 1)])


def complete_graph(k: int) -> Graph:
    adj = np.ones((k, k), dtype=bool)
    np.fill_diagonal(adj, False)
    return Graph(adj)


def empty_graph(k: int) -> Graph:
    return Graph(np.zeros((k, k), dtype=bool))


def complete_bipartite(a: int, b: int) -> Graph:
    return Graph.from_edge_list(a + b, [(i, a + j) for i in range(a) for j in range(b)])


def petersen_graph() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph.from_edge_list(10, outer + spokes + inner)


def bull_graph() -> Graph:
    """Triangle 0-1-2 with pendant 3 at vertex 0 and pendant 4 at vertex 1."""
    return Graph.from_edge_list(5, [(0, 1), (1, 2), (0, 2), (0, 3), (1, 4)])


def anchor_graph(center_to_apart: bool = False) -> Graph:
    """Path 0-1-2-3, vertex 4 complete to it, vertex 5 anticomplete to it."""
    edges = [(0, 1), (1, 2), (2, 3)] + [(i, 4) for i in range(4)]
    if center_to_apart:
        edges.append((4, 5))
    return Graph.from_edge_list(6, edges)


def add_vertex(g: Graph, neighbors: Iterable[int]) -> Graph:
    """Return ``g`` plus one new vertex ``n`` joined to ``neighbors``."""
    n = g.n
    adj = np.zeros((n + 1, n + 1), dtype=bool)
    adj[:n, :n] = g.adj
    for v in neighbors:
        adj[n, v] = adj[v, n] = True
    return Graph(adj)
