"""Seeded graph generators for test corpora.

Randomness comes from numpy's PCG64 bit generator seeded through
``SeedSequence(seed)``. Only its raw 64-bit outputs are used, converted by
the fixed rules in :class:`Stream`, so a given seed yields the same graphs
on every platform and numpy release.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

import numpy as np

from .graph import Graph, cycle_graph
from .patterns import find_bull


class GeneratorError(ValueError):
    pass


class Stream:
    """Deterministic draws built from PCG64 raw output.

    * ``uniform``: top 53 bits of a raw word, scaled to [0, 1).
    * ``below(k)``: ``floor(uniform * k)``.
    """

    def __init__(self, seed: int, *salt: int):
        self._bg = np.random.PCG64(np.random.SeedSequence([seed, *salt]) if salt else seed)

    def uniform(self, size: int | None = None):
        if size is None:
            return float(self._bg.random_raw() >> 11) * 2.0**-53
        raw = np.asarray(self._bg.random_raw(size), dtype=np.uint64)
        return (raw >> np.uint64(11)).astype(np.float64) * 2.0**-53

    def below(self, k: int) -> int:
        return int(self.uniform() * k)

    def chance(self, p: float) -> bool:
        return self.uniform() < p


@dataclass(frozen=True)
class GenSpec:
    """Parameters shared by the generators.

    ``n`` is the target vertex count, ``density`` the edge probability.
    ``base`` / ``base_size`` / ``substitutions`` / ``piece_max`` steer the
    substitution-based generators; ``path_lengths`` and ``max_path`` the
    pyramid; the ``f_*``, ``v*_attach`` and ``v5_adjacency`` fields the
    jewel. Unset structure fields are drawn at random.
    """

    seed: int = 0
    n: int = 10
    density: float = 0.5
    base: Optional[Graph] = None
    base_size: Optional[int] = None
    substitutions: Optional[int] = None
    piece_max: int = 4
    path_lengths: Optional[tuple[int, int, int]] = None
    max_path: int = 4
    f_graph: Optional[Graph] = None
    f_size: Optional[int] = None
    v1_attach: Optional[tuple[int, ...]] = None
    v4_attach: Optional[tuple[int, ...]] = None
    v5_adjacency: Optional[tuple[bool, bool]] = None

    def __post_init__(self):
        if not 0 <= self.seed < 2**64:
            raise ValueError(f"seed must fit in 64 unsigned bits, got {self.seed}")
        if self.n < 0:
            raise ValueError(f"n must be non-negative, got {self.n}")
        if not 0.0 <= self.density <= 1.0:
            raise ValueError(f"density must lie in [0, 1], got {self.density}")
        if self.piece_max < 2:
            raise ValueError("piece_max must be at least 2")
        if self.max_path < 2:
            raise ValueError("max_path must be at least 2")
        if self.substitutions is not None and self.substitutions < 0:
            raise ValueError("substitutions must be non-negative")


def substitute(g: Graph, v: int, h: Graph) -> Graph:
    """Replace vertex ``v`` of ``g`` by a copy of ``h``.

    Vertex 0 of ``h`` takes over index ``v``; the other vertices of ``h`` are
    appended after the vertices of ``g`` in order. Every former neighbour of
    ``v`` becomes complete to the copy, every other vertex anticomplete.
    """
    if not 0 <= v < g.n:
        raise ValueError(f"vertex {v} not in graph with {g.n} vertices")
    if h.n == 0:
        raise ValueError("cannot substitute an empty graph")
    n = g.n + h.n - 1
    copy = [v] + list(range(g.n, n))
    adj = np.zeros((n, n), dtype=bool)
    adj[: g.n, : g.n] = g.adj
    outside = np.ones(n, dtype=bool)
    outside[copy] = False
    ext = np.zeros(n, dtype=bool)
    ext[: g.n] = g.adj[v]
    ext &= outside
    for x in copy:
        adj[x, :] = ext
        adj[:, x] = ext
    adj[np.ix_(copy, copy)] = h.adj
    return Graph(adj)


def gen_random_graph(spec: GenSpec) -> Graph:
    """G(n, p): pair (i, j), i < j, in lexicographic order is an edge iff
    its uniform draw is below ``density``."""
    rng = Stream(spec.seed)
    return _er(rng, spec.n, spec.density)


def _er(rng: Stream, n: int, p: float) -> Graph:
    adj = np.zeros((n, n), dtype=bool)
    iu, ju = np.triu_indices(n, 1)
    if iu.size:
        hit = rng.uniform(iu.size) < p
        adj[iu[hit], ju[hit]] = True
    return Graph(adj | adj.T)


def _triangle_free(rng: Stream, n: int, p: float) -> Graph:
    """G(n, p) with triangles broken: for edges ij in lexicographic order,
    every triangle ijk with k > j loses one of its three edges at random."""
    adj = _er(rng, n, p).adj.copy()
    for i in range(n):
        for j in range(i + 1, n):
            while adj[i, j]:
                common = np.flatnonzero(adj[i, j + 1 :] & adj[j, j + 1 :])
                if common.size == 0:
                    break
                k = j + 1 + int(common[0])
                a, b = [(i, j), (i, k), (j, k)][rng.below(3)]
                adj[a, b] = adj[b, a] = False
    return Graph(adj)


def _random_connected(rng: Stream, n: int, p: float) -> Graph:
    adj = np.zeros((n, n), dtype=bool)
    for v in range(1, n):
        u = rng.below(v)
        adj[u, v] = adj[v, u] = True
    for i in range(n):
        for j in range(i + 1, n):
            if not adj[i, j] and rng.chance(p):
                adj[i, j] = adj[j, i] = True
    return Graph(adj)


def _piece(rng: Stream, size: int) -> Graph:
    # graphs on at most four vertices cannot contain a bull
    if size <= 4:
        return _er(rng, size, 0.5)
    return _triangle_free(rng, size, 0.5)


def _blow_up(rng: Stream, g: Graph, spec: GenSpec) -> Graph:
    count = spec.substitutions
    done = 0
    while (count is None and g.n < spec.n) or (count is not None and done < count):
        if g.n == 0:
            break
        v = rng.below(g.n)
        size = 2 + rng.below(spec.piece_max - 1)
        if count is None:
            size = min(size, spec.n - g.n + 1)
        g = substitute(g, v, _piece(rng, size))
        done += 1
    return g


def gen_bullfree(spec: GenSpec, retries: int = 8) -> Graph:
    """A bull-free graph of about ``spec.n`` vertices.

    Start from ``spec.base`` or a random triangle-free graph (no triangle,
    so no bull) on ``base_size`` vertices, then substitute small bull-free
    pieces into random vertices. The bull has no homogeneous set, so
    substitution keeps the graph bull-free; the result is still checked.
    """
    for attempt in range(retries):
        rng = Stream(spec.seed) if attempt == 0 else Stream(spec.seed, attempt)
        if spec.base is not None:
            g = spec.base
        else:
            size = spec.base_size if spec.base_size is not None else max(1, (spec.n + 1) // 2)
            g = _triangle_free(rng, min(size, spec.n) if spec.n else 0, spec.density)
        g = _blow_up(rng, g, spec)
        if find_bull(g) is None:
            return g
        if spec.base is not None:
            raise GeneratorError("the supplied base graph is not bull-free")
    raise GeneratorError(f"no bull-free graph after {retries} attempts (seed {spec.seed})")


def gen_planted_odd_hole(k: int, spec: GenSpec) -> Graph:
    """C_k on vertices 0..k-1 with random bull-free pieces substituted in.

    One vertex of every substituted piece keeps its cycle index, so
    vertices 0..k-1 still induce C_k.
    """
    if k < 5 or k % 2 == 0:
        raise ValueError(f"planted hole length must be odd and at least 5, got {k}")
    rng = Stream(spec.seed)
    return _blow_up(rng, cycle_graph(k), spec)


def _path_lengths(rng: Stream, spec: GenSpec) -> tuple[int, int, int]:
    if spec.path_lengths is not None:
        lengths = tuple(int(x) for x in spec.path_lengths)
        if len(lengths) != 3 or min(lengths) < 1:
            raise GeneratorError(f"pyramid needs three path lengths >= 1, got {spec.path_lengths}")
        if sum(1 for x in lengths if x == 1) > 1:
            raise GeneratorError(
                f"path lengths {lengths} make the apex adjacent to more than one base vertex"
            )
        return lengths
    while True:
        lengths = tuple(1 + rng.below(spec.max_path) for _ in range(3))
        if sum(1 for x in lengths if x == 1) <= 1:
            return lengths


def gen_pyramid(spec: GenSpec) -> Graph:
    """Apex 0, base triangle 1-2-3, path i of the given length from 0 to i."""
    rng = Stream(spec.seed)
    lengths = _path_lengths(rng, spec)
    edges = [(1, 2), (1, 3), (2, 3)]
    paths = []
    nxt = 4
    for i, length in enumerate(lengths):
        inner = list(range(nxt, nxt + length - 1))
        nxt += length - 1
        path = [0] + inner + [i + 1]
        edges += list(zip(path, path[1:]))
        paths.append(path)
    g = Graph.from_edge_list(nxt, edges)
    _check_pyramid(g, paths)
    return g


def _is_path(g: Graph, path: Sequence[int]) -> bool:
    for i in range(len(path)):
        for j in range(i + 1, len(path)):
            if g.adjacent(path[i], path[j]) != (j == i + 1):
                return False
    return True


def _check_pyramid(g: Graph, paths: list[list[int]]) -> None:
    apex = paths[0][0]
    base = [p[-1] for p in paths]
    if not all(g.adjacent(x, y) for x in base for y in base if x != y):
        raise GeneratorError("base is not a triangle")
    for p in paths:
        if p[0] != apex or not _is_path(g, p):
            raise GeneratorError(f"{p} is not an induced path from the apex")
    for i in range(3):
        for j in range(i + 1, 3):
            if set(paths[i]) & set(paths[j]) != {apex}:
                raise GeneratorError("paths meet outside the apex")
            cross = [
                (x, y) for x in paths[i][1:] for y in paths[j][1:] if g.adjacent(x, y)
            ]
            if cross != [(base[i], base[j])]:
                raise GeneratorError(f"paths {i} and {j} have extra edges {cross}")
    if sum(1 for b in base if g.adjacent(apex, b)) > 1:
        raise GeneratorError("apex is adjacent to more than one base vertex")


def gen_jewel(spec: GenSpec) -> Graph:
    """v1..v5 on vertices 0..4, F on vertices 5.. .

    Cycle v1 v2 v3 v4 v5; v1v3, v2v4, v1v4 non-edges; v5v2 and v5v3 as set
    by ``v5_adjacency``. Only v1 and v4 have neighbours in F, and F is
    connected.
    """
    rng = Stream(spec.seed)
    if spec.f_graph is not None:
        f = spec.f_graph
    else:
        size = spec.f_size if spec.f_size is not None else 1 + rng.below(5)
        if size < 1:
            raise GeneratorError("F must have at least one vertex")
        f = _random_connected(rng, size, spec.density)
    if f.n < 1 or not _connected(f):
        raise GeneratorError("F must be non-empty and connected")

    def attach(given):
        if given is not None:
            chosen = tuple(int(x) for x in given)
        else:
            chosen = tuple(x for x in range(f.n) if rng.chance(0.5)) or (rng.below(f.n),)
        if not chosen:
            raise GeneratorError("v1 and v4 must each have a neighbour in F")
        if any(not 0 <= x < f.n for x in chosen):
            raise GeneratorError(f"attachment {chosen} outside F")
        return chosen

    a1 = attach(spec.v1_attach)
    a4 = attach(spec.v4_attach)
    if spec.v5_adjacency is not None:
        to2, to3 = (bool(x) for x in spec.v5_adjacency)
    else:
        to2, to3 = rng.chance(0.5), rng.chance(0.5)

    edges = [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]
    if to2:
        edges.append((4, 1))
    if to3:
        edges.append((4, 2))
    edges += [(5 + u, 5 + w) for u, w in f.edges()]
    edges += [(0, 5 + x) for x in a1] + [(3, 5 + x) for x in a4]
    return Graph.from_edge_list(5 + f.n, edges)


def _connected(g: Graph) -> bool:
    if g.n == 0:
        return True
    seen = {0}
    todo = [0]
    while todo:
        for w in g.neighbors[todo.pop()]:
            if w not in seen:
                seen.add(w)
                todo.append(w)
    return len(seen) == g.n
