"""Run the theorem checkers and the oracle comparison over a corpus."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable

from . import oracle
from .clean import verify_odd_hole
from .driver import DetectOptions, detect_odd_hole_bullfree
from .formats import CorpusEntry, write_graph6
from .homogeneous import find_homogeneous_set

CHECKS = ("oracle-equivalence", "witness", "hset", "clean", "patterns", "holeprime")


@dataclass
class CheckTally:
    checked: int = 0
    applicable: int = 0
    failures: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures


@dataclass
class ValidationReport:
    tallies: dict[str, CheckTally] = field(default_factory=lambda: {c: CheckTally() for c in CHECKS})
    skipped: int = 0

    @property
    def ok(self) -> bool:
        return all(t.ok for t in self.tallies.values())

    def lines(self) -> list[str]:
        out = []
        for name in CHECKS:
            t = self.tallies[name]
            status = "PASS" if t.ok else "FAIL"
            out.append(f"{status} {name}: {t.checked} graphs, {t.applicable} non-vacuous, {len(t.failures)} failures")
            out += [f"  counterexample {g6}" for g6 in t.failures[:5]]
        if self.skipped:
            out.append(f"skipped {self.skipped} graphs above the oracle cap")
        return out


def validate_entries(entries: Iterable[CorpusEntry], cap: int = oracle.DEFAULT_CAP) -> ValidationReport:
    """Check every graph against the structural theorems.

    Graphs generated as ``kind=jewel`` or ``kind=pyramid`` must contain a
    bull, a C5 or an anchor. Bull-free graphs are run through the driver
    and compared with the oracle. Graphs above ``cap`` are skipped.
    """
    report = ValidationReport()
    t = report.tallies
    for entry in entries:
        g = entry.graph
        if g.n > cap:
            report.skipped += 1
            continue
        tag = write_graph6(g)

        if entry.meta.get("kind") in ("jewel", "pyramid"):
            t["patterns"].checked += 1
            t["patterns"].applicable += 1
            if not oracle.check_pattern_theorem(g, cap):
                t["patterns"].failures.append(tag)

        bull = oracle.oracle_find_pattern(g, "Bull", cap)
        c5 = oracle.oracle_find_pattern(g, "C5", cap)
        anchor = oracle.oracle_find_pattern(g, "Anchor", cap)

        t["hset"].checked += 1
        if bull is None and c5 is None and anchor is not None:
            t["hset"].applicable += 1
            if not oracle.check_hset_theorem(g, cap):
                t["hset"].failures.append(tag)

        t["clean"].checked += 1
        if bull is None and c5 is None and anchor is None and oracle.oracle_find_odd_hole(g, cap):
            t["clean"].applicable += 1
            if not oracle.check_clean_theorem(g, cap):
                t["clean"].failures.append(tag)

        x = find_homogeneous_set(g)
        t["holeprime"].checked += 1
        if x is not None:
            t["holeprime"].applicable += 1
            if not oracle.check_holeprime(g, x, cap):
                t["holeprime"].failures.append(tag)

        if bull is None:
            t["oracle-equivalence"].checked += 1
            t["oracle-equivalence"].applicable += 1
            verdict = detect_odd_hole_bullfree(g, DetectOptions(verify_bull_free=False))
            expected = oracle.oracle_find_odd_hole(g, cap) is not None
            if verdict.found != expected:
                t["oracle-equivalence"].failures.append(tag)
            if verdict.found:
                t["witness"].checked += 1
                t["witness"].applicable += 1
                if not verify_odd_hole(g, verdict.witness):
                    t["witness"].failures.append(tag)
    return report


def validate_graphs(graphs: Iterable, cap: int = oracle.DEFAULT_CAP, kind: str | None = None) -> ValidationReport:
    meta = {"kind": kind} if kind else {}
    return validate_entries((CorpusEntry(g, dict(meta)) for g in graphs), cap)
