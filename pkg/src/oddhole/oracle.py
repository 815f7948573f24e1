"""Exponential-time ground truth.

Nothing here calls into the polynomial-time modules: odd holes, patterns and
homogeneous sets are all found by enumerating vertex subsets, so these
functions can be used to check the fast code paths and the structural
theorems they rely on. Every entry point refuses graphs above ``cap``
vertices.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import combinations, permutations
from typing import Iterable, Optional, Sequence

import numpy as np

from .graph import Graph, anchor_graph, bull_graph, cycle_graph, induced_subgraph, is_induced_cycle

DEFAULT_CAP = 16


class OracleCapExceeded(ValueError):
    pass


def _check_cap(g: Graph, cap: int) -> None:
    if g.n > cap:
        raise OracleCapExceeded(f"graph has {g.n} vertices, oracle cap is {cap}")


@lru_cache(maxsize=None)
def _combos(n: int, k: int) -> np.ndarray:
    out = np.array(list(combinations(range(n), k)), dtype=np.int64)
    return out.reshape(-1, k)


def _cycle_order(g: Graph, vertices: Sequence[int]) -> tuple[int, ...]:
    """Walk a 2-regular connected vertex set: start at its least vertex and
    head for the smaller of its two neighbours."""
    vs = sorted(vertices)
    inside = set(vs)
    start = vs[0]
    order = [start, min(w for w in g.neighbors[start] if w in inside)]
    while len(order) < len(vs):
        prev, cur = order[-2], order[-1]
        order.append(next(w for w in g.neighbors[cur] if w in inside and w != prev))
    return tuple(order)


def _holes_of_size(g: Graph, k: int, first_only: bool) -> list[tuple[int, ...]]:
    combos = _combos(g.n, k)
    if combos.size == 0:
        return []
    sub = g.adj[combos[:, :, None], combos[:, None, :]]
    degree_two = (sub.sum(axis=2) == 2).all(axis=1)
    found = []
    for row in np.flatnonzero(degree_two):
        order = _cycle_order(g, combos[row].tolist())
        # a 2-regular set is a single cycle iff the walk closes over all of it
        if is_induced_cycle(g, order):
            found.append(order)
            if first_only:
                break
    return found


def oracle_find_odd_hole(g: Graph, cap: int = DEFAULT_CAP) -> Optional[tuple[int, ...]]:
    """First odd hole in size-then-lexicographic subset order.

    The witness is therefore a shortest odd hole.
    """
    _check_cap(g, cap)
    for k in range(5, g.n + 1, 2):
        holes = _holes_of_size(g, k, first_only=True)
        if holes:
            return holes[0]
    return None


def all_minimum_odd_holes(g: Graph, cap: int = DEFAULT_CAP) -> list[tuple[int, ...]]:
    """Every odd hole of minimum length (empty if there is none)."""
    _check_cap(g, cap)
    for k in range(5, g.n + 1, 2):
        holes = _holes_of_size(g, k, first_only=False)
        if holes:
            return holes
    return []


def dfs_find_odd_hole(g: Graph) -> Optional[tuple[int, ...]]:
    """Independent second method: grow induced paths from each start vertex
    (all other vertices larger than it) and close them into odd cycles."""
    nbrs = [set(row) for row in g.neighbors]

    def extend(path: list[int], start: int) -> Optional[tuple[int, ...]]:
        last = path[-1]
        for v in sorted(nbrs[last]):
            if v <= start or v in path:
                continue
            # v may touch only the last vertex and, when closing, the start
            if any(u in nbrs[v] for u in path[1:-1]):
                continue
            if len(path) >= 2 and start in nbrs[v]:
                if len(path) >= 4 and len(path) % 2 == 0:
                    return tuple(path + [v])
                continue
            found = extend(path + [v], start)
            if found:
                return found
        return None

    for s in range(g.n):
        found = extend([s], s)
        if found:
            return found
    return None


# ---------------------------------------------------------------- patterns

def _reference(kind: str) -> list[np.ndarray]:
    kind = getattr(kind, "value", kind)
    if kind == "C5":
        return [cycle_graph(5).adj]
    if kind == "Bull":
        return [bull_graph().adj]
    if kind == "Anchor":
        return [anchor_graph(False).adj, anchor_graph(True).adj]
    raise ValueError(f"unknown pattern kind {kind!r}")


def _pair_code(mat: np.ndarray, k: int) -> int:
    code = 0
    for idx, (i, j) in enumerate(combinations(range(k), 2)):
        if mat[i, j]:
            code |= 1 << idx
    return code


@lru_cache(maxsize=None)
def _valid_codes(kind: str) -> frozenset[int]:
    codes = set()
    for ref in _reference(kind):
        k = ref.shape[0]
        for perm in permutations(range(k)):
            p = np.array(perm)
            relabeled = np.zeros_like(ref)
            relabeled[np.ix_(p, p)] = ref
            codes.add(_pair_code(relabeled, k))
    return frozenset(codes)


def oracle_find_pattern(g: Graph, kind, cap: int = DEFAULT_CAP) -> Optional[tuple[int, ...]]:
    """Least occurring vertex subset (lexicographic) isomorphic to the
    pattern, returned in its least valid role order."""
    _check_cap(g, cap)
    kind = getattr(kind, "value", kind)
    refs = _reference(kind)
    k = refs[0].shape[0]
    combos = _combos(g.n, k)
    if combos.size == 0:
        return None
    ii, jj = zip(*combinations(range(k), 2))
    bits = g.adj[combos[:, list(ii)], combos[:, list(jj)]].astype(np.int64)
    codes = bits @ (1 << np.arange(len(ii), dtype=np.int64))
    valid = np.fromiter(_valid_codes(kind), dtype=np.int64)
    hits = np.flatnonzero(np.isin(codes, valid))
    if hits.size == 0:
        return None
    subset = combos[hits[0]].tolist()
    for perm in permutations(subset):
        sub = g.adj[np.ix_(perm, perm)]
        if any(np.array_equal(sub, ref) for ref in refs):
            return tuple(int(v) for v in perm)
    raise AssertionError("pattern code matched but no role order fits")


def homogeneous_sets_bruteforce(g: Graph, cap: int = DEFAULT_CAP, first_only: bool = False) -> list[frozenset[int]]:
    """All homogeneous sets, in order of increasing size then bitmask."""
    _check_cap(g, cap)
    n = g.n
    if n < 3:
        return []
    masks = ((np.arange(1 << n)[:, None] >> np.arange(n)) & 1).astype(np.int64)
    sizes = masks.sum(axis=1)
    counts = masks @ g.adj.astype(np.int64)
    outside = masks == 0
    ok = np.where(outside, (counts == 0) | (counts == sizes[:, None]), True).all(axis=1)
    ok &= (sizes > 1) & (sizes < n)
    rows = np.flatnonzero(ok)
    rows = rows[np.argsort(sizes[rows], kind="stable")]
    if first_only:
        rows = rows[:1]
    return [frozenset(np.flatnonzero(masks[r]).tolist()) for r in rows]


# ------------------------------------------------------------ theorem checks

def is_clean(g: Graph, hole: Sequence[int]) -> bool:
    """Every outside vertex sees the hole inside some two-edge subpath."""
    hole = list(hole)
    if len(hole) < 4 or not is_induced_cycle(g, hole):
        raise ValueError(f"{hole} is not a hole of the graph")
    k = len(hole)
    position = {v: i for i, v in enumerate(hole)}
    windows = [{(i - 1) % k, i, (i + 1) % k} for i in range(k)]
    for v in range(g.n):
        if v in position:
            continue
        seen = {position[w] for w in g.neighbors[v] if w in position}
        if not any(seen <= win for win in windows):
            return False
    return True


def is_pure(g: Graph, cap: int = DEFAULT_CAP) -> bool:
    holes = all_minimum_odd_holes(g, cap)
    return not holes or any(is_clean(g, h) for h in holes)


def _bull_c5_free(g: Graph, cap: int) -> bool:
    return oracle_find_pattern(g, "Bull", cap) is None and oracle_find_pattern(g, "C5", cap) is None


def check_hset_theorem(g: Graph, cap: int = DEFAULT_CAP) -> bool:
    """A bull-free, C5-free graph with an anchor has a homogeneous set.

    Vacuously true when the hypotheses fail.
    """
    _check_cap(g, cap)
    if not _bull_c5_free(g, cap) or oracle_find_pattern(g, "Anchor", cap) is None:
        return True
    return bool(homogeneous_sets_bruteforce(g, cap, first_only=True))


def check_clean_theorem(g: Graph, cap: int = DEFAULT_CAP) -> bool:
    """In a bull-free, C5-free, anchor-free graph every shortest odd hole is clean."""
    _check_cap(g, cap)
    if not _bull_c5_free(g, cap) or oracle_find_pattern(g, "Anchor", cap) is not None:
        return True
    return all(is_clean(g, h) for h in all_minimum_odd_holes(g, cap))


def check_pattern_theorem(g: Graph, cap: int = DEFAULT_CAP) -> bool:
    """The graph contains a bull, a C5 or an anchor (expected for every
    jewel and pyramid)."""
    return any(oracle_find_pattern(g, kind, cap) is not None for kind in ("Bull", "C5", "Anchor"))


def check_holeprime(g: Graph, x: Iterable[int], cap: int = DEFAULT_CAP) -> bool:
    """G has an odd hole iff G1(X) or G2(X) has one."""
    _check_cap(g, cap)
    xs = sorted(set(int(v) for v in x))
    if not 1 < len(xs) < g.n:
        raise ValueError(f"{xs} is not a proper vertex set of size at least 2")
    members = set(xs)
    for v in range(g.n):
        if v in members:
            continue
        seen = sum(1 for w in xs if g.adjacent(v, w))
        if 0 < seen < len(xs):
            raise ValueError(f"{xs} is not homogeneous: vertex {v} is mixed on it")
    g1, _ = induced_subgraph(g, [v for v in range(g.n) if v not in members or v == xs[0]])
    g2, _ = induced_subgraph(g, xs)
    whole = oracle_find_odd_hole(g, cap) is not None
    parts = oracle_find_odd_hole(g1, cap) is not None or oracle_find_odd_hole(g2, cap) is not None
    return whole == parts
