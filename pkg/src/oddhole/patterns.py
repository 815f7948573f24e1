"""Detection of the small fixed patterns: C5, the bull and the anchor.

Each finder returns the witness whose sorted vertex set is lexicographically
least among all occurrences; within that set the role tuple is the
lexicographically least valid assignment. For a C5 this means the cycle
starts at its least vertex and continues towards the smaller of that
vertex's two cycle neighbours; for a bull it means ``t1 < t2``.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from itertools import permutations
from typing import Optional, Sequence

import numpy as np

from . import _kernels
from .graph import Graph, mask_bits


class PatternKind(str, enum.Enum):
    C5 = "C5"
    BULL = "Bull"
    ANCHOR = "Anchor"


@dataclass(frozen=True)
class PatternWitness:
    """Vertex tuple in role order.

    C5: cycle order. Bull: t1, t2, t3, pendant at t1, pendant at t2.
    Anchor: p1..p4 of the path, the complete vertex c, the apart vertex a.
    """

    kind: PatternKind
    vertices: tuple[int, ...]

    def __iter__(self):
        return iter(self.vertices)


# role templates: pairs that must be edges; every other pair of roles is a
# non-edge, except the pairs listed as free
_TEMPLATES: dict[PatternKind, tuple[frozenset, frozenset]] = {
    PatternKind.C5: (
        frozenset({(0, 1), (1, 2), (2, 3), (3, 4), (0, 4)}),
        frozenset(),
    ),
    PatternKind.BULL: (
        frozenset({(0, 1), (0, 2), (1, 2), (0, 3), (1, 4)}),
        frozenset(),
    ),
    PatternKind.ANCHOR: (
        frozenset({(0, 1), (1, 2), (2, 3), (0, 4), (1, 4), (2, 4), (3, 4)}),
        frozenset({(4, 5)}),
    ),
}

PATTERN_SIZE = {PatternKind.C5: 5, PatternKind.BULL: 5, PatternKind.ANCHOR: 6}


def matches_roles(g: Graph, kind: PatternKind, roles: Sequence[int]) -> bool:
    """True iff ``roles`` induces ``kind`` in ``g`` with the declared role order."""
    kind = PatternKind(kind)
    size = PATTERN_SIZE[kind]
    if len(roles) != size or len(set(roles)) != size:
        return False
    if any(not 0 <= v < g.n for v in roles):
        return False
    edges, free = _TEMPLATES[kind]
    for i in range(size):
        for j in range(i + 1, size):
            if (i, j) in free:
                continue
            if g.adjacent(roles[i], roles[j]) != ((i, j) in edges):
                return False
    return True


def least_roles(g: Graph, kind: PatternKind, vertex_set: Sequence[int]) -> Optional[tuple[int, ...]]:
    """Lexicographically least role tuple over ``vertex_set``, if any."""
    for perm in permutations(sorted(vertex_set)):
        if matches_roles(g, kind, perm):
            return perm
    return None


def _allowed(g: Graph, allowed) -> np.ndarray:
    if allowed is None:
        return mask_bits(g.n, range(g.n))
    return mask_bits(g.n, allowed)


def _finish(g: Graph, kind: PatternKind, found: np.ndarray) -> Optional[PatternWitness]:
    if found[0] < 0:
        return None
    roles = least_roles(g, kind, [int(v) for v in found])
    assert roles is not None, "kernel returned a set that does not induce the pattern"
    return PatternWitness(kind, tuple(int(v) for v in roles))


def find_c5(g: Graph, allowed=None) -> Optional[PatternWitness]:
    """Least induced C5 of ``g`` (optionally within the vertex set ``allowed``)."""
    if g.n < 5:
        return None
    mask = _allowed(g, allowed)
    hit = _kernels.c5_search(g.bits, mask, g.n)
    if hit[0] < 0:
        return None
    # the first apex reached by the scan is the least vertex of the least set
    best = _kernels.c5_least_through(g.bits, mask, g.n, int(hit[0]))
    return _finish(g, PatternKind.C5, best)


def find_bull(g: Graph, allowed=None) -> Optional[PatternWitness]:
    if g.n < 5:
        return None
    mask = _allowed(g, allowed)
    if _kernels.bull_search(g.bits, mask, g.n)[0] < 0:
        return None
    return _finish(g, PatternKind.BULL, _kernels.bull_least(g.bits, mask, g.n))


def find_anchor(g: Graph, allowed=None) -> Optional[PatternWitness]:
    if g.n < 6:
        return None
    mask = _allowed(g, allowed)
    if _kernels.anchor_search(g.bits, mask, g.n)[0] < 0:
        return None
    return _finish(g, PatternKind.ANCHOR, _kernels.anchor_least(g.bits, mask, g.n))


def find_pattern(g: Graph, kind: PatternKind, allowed=None) -> Optional[PatternWitness]:
    kind = PatternKind(kind)
    return {
        PatternKind.C5: find_c5,
        PatternKind.BULL: find_bull,
        PatternKind.ANCHOR: find_anchor,
    }[kind](g, allowed)
