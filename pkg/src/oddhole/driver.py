"""Odd-hole detection for bull-free graphs.

Each subproblem is handled in three steps:

1. look for an induced C5 by 5-tuple search;
2. if the graph has a homogeneous set X, replace it by G1(X) and G2(X)
   (X shrunk to one vertex, and G[X]) and handle both;
3. otherwise run the clean shortest odd hole scan, which is complete on
   C5-free bull-free graphs without a homogeneous set.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Optional

import numpy as np

from .clean import detect_clean_shortest_odd_hole, verify_odd_hole
from .graph import Graph
from .homogeneous import find_homogeneous_set, split
from .patterns import PatternWitness, find_bull, find_c5


class Answer(str, enum.Enum):
    YES = "YES"
    NO = "NO"


class InputNotBullFree(ValueError):
    def __init__(self, witness: PatternWitness):
        self.witness = witness
        super().__init__(f"input graph contains a bull on {list(witness.vertices)}")


class OracleMismatch(AssertionError):
    pass


@dataclass(frozen=True)
class TraceEvent:
    """One step of the recursion.

    ``kind`` is one of ``c5-found``, ``split``, ``base-case``, ``trivial``
    or ``unverified-precondition``. ``vertices`` are original input indices:
    the subproblem's vertex set, or the homogeneous set for ``split``.
    """

    kind: str
    size: int
    vertices: tuple[int, ...] = ()
    sizes: tuple[int, ...] = ()


@dataclass(frozen=True)
class Verdict:
    answer: Answer
    witness: Optional[tuple[int, ...]] = None
    trace: list[TraceEvent] = field(default_factory=list)

    @property
    def found(self) -> bool:
        return self.answer is Answer.YES


@dataclass(frozen=True)
class DetectOptions:
    verify_bull_free: bool = True
    cross_check_oracle: bool = False
    oracle_cap: int = 16

    def __post_init__(self):
        if self.oracle_cap < 0:
            raise ValueError("oracle_cap must be non-negative")


def verify_bull_free(g: Graph) -> Optional[PatternWitness]:
    """Return a bull of ``g`` if there is one (so None means bull-free)."""
    return find_bull(g)


def detect_odd_hole_bullfree(g: Graph, opts: DetectOptions | None = None) -> Verdict:
    opts = opts or DetectOptions()
    if opts.cross_check_oracle and g.n > opts.oracle_cap:
        raise ValueError(f"oracle cross-check requested for n={g.n} above the cap {opts.oracle_cap}")
    if opts.verify_bull_free:
        bull = verify_bull_free(g)
        if bull is not None:
            raise InputNotBullFree(bull)

    verdict = _run(g)
    if verdict.found and not verify_odd_hole(g, verdict.witness):
        raise AssertionError(f"witness {verdict.witness} is not an odd hole of the input")
    if not verdict.found and not opts.verify_bull_free:
        verdict.trace.append(TraceEvent("unverified-precondition", g.n))

    if opts.cross_check_oracle:
        from .oracle import oracle_find_odd_hole

        expected = oracle_find_odd_hole(g, cap=opts.oracle_cap) is not None
        if expected != verdict.found:
            raise OracleMismatch(
                f"driver says {verdict.answer.value}, oracle says {'YES' if expected else 'NO'}"
            )
    return verdict


def _run(g: Graph) -> Verdict:
    trace: list[TraceEvent] = []
    # each item is a subgraph plus the map from its vertices to input vertices
    stack: list[tuple[Graph, np.ndarray]] = [(g, np.arange(g.n, dtype=np.int64))]
    while stack:
        h, vmap = stack.pop()
        ids = tuple(int(v) for v in vmap)
        if h.n < 5:
            trace.append(TraceEvent("trivial", h.n, ids))
            continue
        c5 = find_c5(h)
        if c5 is not None:
            hole = tuple(int(vmap[v]) for v in c5.vertices)
            trace.append(TraceEvent("c5-found", h.n, hole))
            return Verdict(Answer.YES, hole, trace)
        x = find_homogeneous_set(h)
        if x is not None:
            parts = split(h, x)
            trace.append(
                TraceEvent(
                    "split",
                    h.n,
                    tuple(sorted(int(vmap[v]) for v in x)),
                    (parts.g1.n, parts.g2.n),
                )
            )
            # pushed in reverse so that g1 is handled first
            stack.append((parts.g2, vmap[parts.map2]))
            stack.append((parts.g1, vmap[parts.map1]))
            continue
        hole = detect_clean_shortest_odd_hole(h)
        trace.append(TraceEvent("base-case", h.n, ids))
        if hole is not None:
            return Verdict(Answer.YES, tuple(int(vmap[v]) for v in hole), trace)
    return Verdict(Answer.NO, None, trace)
