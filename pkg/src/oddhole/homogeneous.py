"""Homogeneous sets (non-trivial modules) and the quotient/induced split."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional

import numpy as np

from . import _kernels as _k
from .graph import Graph, induced_subgraph


class SplitError(ValueError):
    pass


@dataclass(frozen=True)
class SplitResult:
    """``g1`` keeps one representative of X, ``g2`` is ``G[X]``.

    ``map1`` and ``map2`` send vertices of ``g1`` / ``g2`` to parent vertices.
    """

    g1: Graph
    g2: Graph
    map1: np.ndarray
    map2: np.ndarray
    representative: int


def is_homogeneous(g: Graph, x: Iterable[int]) -> bool:
    members = np.zeros(g.n, dtype=bool)
    members[list(x)] = True
    size = int(members.sum())
    if not 1 < size < g.n:
        return False
    counts = g.adj[:, members].sum(axis=1)
    outside = ~members
    return bool(np.all((counts[outside] == 0) | (counts[outside] == size)))


def _adj8(g: Graph) -> np.ndarray:
    return g.adj.view(np.uint8)


def module_closure(g: Graph, seed: Iterable[int]) -> np.ndarray:
    """Smallest module containing ``seed``, as a boolean mask.

    Any outside vertex that sees part of the current set, but not all of it,
    must belong to every module containing the set, so it is absorbed.
    """
    members = np.zeros(g.n, dtype=bool)
    members[list(seed)] = True
    return _k.module_closure_mask(_adj8(g), members)


def modules_avoiding(g: Graph, v: int) -> list[frozenset[int]]:
    """The maximal modules of ``g`` not containing ``v``; they partition
    V - {v}. Found by partition refinement from N(v) and its complement."""
    label = _k.modules_avoiding(_adj8(g), v)
    classes: dict[int, list[int]] = {}
    for u in range(g.n):
        if u != v:
            classes.setdefault(int(label[u]), []).append(u)
    return sorted((frozenset(c) for c in classes.values()), key=min)


def find_homogeneous_set(g: Graph) -> Optional[frozenset[int]]:
    """Return a homogeneous set of ``g``, or None if ``g`` is prime.

    Seed pairs (u, v) are considered in lexicographic order and the result
    is the smallest module containing the first pair whose closure is a
    proper subset of V(g). Pairs through vertex 0 are tried directly; the
    remaining candidates are read off the maximal modules avoiding 0, which
    keeps the search cubic in n.
    """
    mask = _k.homogeneous_mask(_adj8(g))
    if not mask.any():
        return None
    return frozenset(int(x) for x in np.flatnonzero(mask))


def split(g: Graph, x: Iterable[int]) -> SplitResult:
    """Build G1(X) (X shrunk to its least vertex) and G2(X) = G[X]."""
    xs = sorted(set(int(v) for v in x))
    if len(xs) <= 1:
        raise SplitError(f"homogeneous set must have more than one vertex, got {len(xs)}")
    if len(xs) >= g.n:
        raise SplitError("homogeneous set must be a proper subset of V(G)")
    if any(not 0 <= v < g.n for v in xs):
        raise SplitError(f"vertex set has elements outside 0..{g.n - 1}")
    if not is_homogeneous(g, xs):
        raise SplitError(f"{xs} is not homogeneous: some outside vertex is mixed on it")
    rep = xs[0]
    drop = set(xs[1:])
    g1, map1 = induced_subgraph(g, [v for v in range(g.n) if v not in drop])
    g2, map2 = induced_subgraph(g, xs)
    return SplitResult(g1, g2, map1, map2, rep)
