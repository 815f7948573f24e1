"""Acceptance criteria, each at its stated size and tolerance.

Run with ``pytest tests/test_acceptance.py`` (one PASS/FAIL line per
criterion is printed in the terminal summary) or directly with
``python tests/test_acceptance.py``.
"""

from __future__ import annotations

import functools
import itertools
import sys
import time

import pytest

from oddhole.bench import run_bench
from oddhole.clean import verify_odd_hole
from oddhole.corpus import (
    exhaustive_bullfree,
    holes_with_attachments,
    homogeneous_pairs,
    jewels,
    planted,
    pyramids,
    random_bullfree,
)
from oddhole.driver import DetectOptions, detect_odd_hole_bullfree
from oddhole.formats import parse_graph6, write_graph6
from oddhole.graph import complete_graph, empty_graph
from oddhole.oracle import (
    check_clean_theorem,
    check_holeprime,
    check_hset_theorem,
    check_pattern_theorem,
    oracle_find_odd_hole,
    oracle_find_pattern,
)

pytestmark = pytest.mark.acceptance

RESULTS: dict[int, str] = {}

SEED = 20240601
RANDOM_COUNT = 10_000
PLANTED_COUNT = 1_000
PATTERN_COUNT = 1_000
PAIR_COUNT = 1_000
EXTRA_CLASS_COUNT = 2_000  # odd holes with attached vertices, feeds criteria 4 and 5
BENCH_SIZES = [50, 100, 200, 400]


def record(number: int, ok: bool, text: str) -> None:
    RESULTS[number] = f"{'PASS' if ok else 'FAIL'} criterion {number}: {text}"


@functools.lru_cache(maxsize=None)
def exhaustive_graphs():
    return tuple(exhaustive_bullfree(6))


@functools.lru_cache(maxsize=None)
def random_graphs():
    return tuple(random_bullfree(RANDOM_COUNT, SEED, 7, 14))


@functools.lru_cache(maxsize=None)
def planted_graphs():
    return tuple(planted(PLANTED_COUNT, SEED + 1, 14))


@functools.lru_cache(maxsize=None)
def attached_graphs():
    return tuple(holes_with_attachments(EXTRA_CLASS_COUNT, SEED + 2, 14))


def full_corpus():
    return itertools.chain(exhaustive_graphs(), random_graphs(), planted_graphs(), attached_graphs())


def _equivalence(graphs):
    """(mismatches, yes witnesses as (graph, witness) pairs, seconds)."""
    opts = DetectOptions(verify_bull_free=True)
    mismatches, yes = [], []
    start = time.perf_counter()
    for g in graphs:
        v = detect_odd_hole_bullfree(g, opts)
        if v.found != (oracle_find_odd_hole(g) is not None):
            mismatches.append(write_graph6(g))
        if v.found:
            yes.append((g, v.witness))
    return mismatches, yes, time.perf_counter() - start


@functools.lru_cache(maxsize=None)
def criterion_1():
    graphs = exhaustive_graphs()
    mismatches, yes, secs = _equivalence(graphs)
    ok = not mismatches and secs < 120
    detail = f"{len(graphs)} bull-free graphs n<=6, {len(mismatches)} mismatches, {len(yes)} YES, {secs:.1f}s (limit 120s)"
    return ok, detail, tuple(yes)


@functools.lru_cache(maxsize=None)
def criterion_2():
    graphs = random_graphs()
    mismatches, yes, secs = _equivalence(graphs)
    sizes_ok = all(7 <= g.n <= 14 for g in graphs)
    ok = not mismatches and secs < 600 and sizes_ok and len(graphs) == RANDOM_COUNT
    detail = f"{len(graphs)} random bull-free graphs n in [7,14], {len(mismatches)} mismatches, {len(yes)} YES, {secs:.1f}s (limit 600s)"
    return ok, detail, tuple(yes)


def criterion_3():
    checked = bad = 0
    pools = [criterion_1()[2], criterion_2()[2]]
    opts = DetectOptions(verify_bull_free=True)
    planted_yes = []
    for g in planted_graphs():
        v = detect_odd_hole_bullfree(g, opts)
        if not v.found:
            bad += 1  # a planted hole must be reported
        else:
            planted_yes.append((g, v.witness))
    for g, w in itertools.chain(*pools, planted_yes):
        checked += 1
        bad += not verify_odd_hole(g, w)
    ok = bad == 0 and len(planted_yes) == PLANTED_COUNT
    return ok, f"{checked} YES witnesses ({len(planted_yes)} planted), {bad} failures"


def criterion_4():
    checked = applicable = 0
    failures = []
    for g in full_corpus():
        checked += 1
        if oracle_find_pattern(g, "Bull") is None and oracle_find_pattern(g, "C5") is None and oracle_find_pattern(g, "Anchor") is not None:
            applicable += 1
        if not check_hset_theorem(g):
            failures.append(write_graph6(g))
    ok = not failures and applicable > 0
    return ok, f"{checked} corpus graphs, {applicable} bull-free C5-free with an anchor, {len(failures)} counterexamples"


def criterion_5():
    checked = applicable = 0
    failures = []
    for g in full_corpus():
        if g.n > 14:
            continue
        checked += 1
        in_class = all(oracle_find_pattern(g, k) is None for k in ("Bull", "C5", "Anchor"))
        if in_class and oracle_find_odd_hole(g) is not None:
            applicable += 1
        if not check_clean_theorem(g):
            failures.append(write_graph6(g))
    ok = not failures and applicable > 0
    return ok, f"{checked} corpus graphs, {applicable} in the class with an odd hole, {len(failures)} counterexamples"


def criterion_6():
    js = list(jewels(PATTERN_COUNT, SEED + 3))
    ps = list(pyramids(PATTERN_COUNT, SEED + 4))
    bad_j = sum(not check_pattern_theorem(g) for g in js)
    bad_p = sum(not check_pattern_theorem(g) for g in ps)
    ok = bad_j == bad_p == 0 and len(js) == len(ps) == PATTERN_COUNT
    return ok, f"{len(js)} jewels ({bad_j} without a pattern), {len(ps)} pyramids ({bad_p} without a pattern)"


def criterion_7():
    pairs = list(homogeneous_pairs(PAIR_COUNT, SEED + 5, 14))
    bad = sum(not check_holeprime(g, x) for g, x in pairs)
    sizes_ok = all(g.n <= 14 for g, _ in pairs)
    yes = sum(oracle_find_odd_hole(g) is not None for g, _ in pairs)
    ok = bad == 0 and sizes_ok and len(pairs) == PAIR_COUNT
    return ok, f"{len(pairs)} (g, X) pairs n<=14, {yes} with an odd hole, {bad} failures"


def criterion_8():
    report = run_bench(BENCH_SIZES, seed=SEED, trials=5)
    at_400 = report.medians[BENCH_SIZES.index(400)]
    worst_400 = max(report.times[400])
    ok = report.slope <= 5.5 and worst_400 < 300
    medians = ", ".join(f"n={s}: {m:.4f}s" for s, m in zip(report.sizes, report.medians))
    return ok, f"slope {report.slope:.2f} (limit 5.5), {medians}; slowest n=400 run {worst_400:.3f}s (limit 300s), median {at_400:.4f}s"


def criterion_9():
    vectors = [("@", complete_graph(1)), ("A_", complete_graph(2)), ("A?", empty_graph(2))]
    bad = 0
    for text, g in vectors:
        bad += parse_graph6(text) != g or write_graph6(g) != text
    count = 0
    extra = itertools.chain(jewels(PATTERN_COUNT, SEED + 3), pyramids(PATTERN_COUNT, SEED + 4),
                            (g for g, _ in homogeneous_pairs(PAIR_COUNT, SEED + 5, 14)))
    for g in itertools.chain(full_corpus(), extra):
        count += 1
        s = write_graph6(g)
        h = parse_graph6(s)
        bad += h != g or write_graph6(h) != s
    return bad == 0, f"{count} corpus graphs plus 3 vectors, {bad} round-trip failures"


CRITERIA = {
    1: lambda: criterion_1()[:2],
    2: lambda: criterion_2()[:2],
    3: criterion_3,
    4: criterion_4,
    5: criterion_5,
    6: criterion_6,
    7: criterion_7,
    8: criterion_8,
    9: criterion_9,
}


@pytest.mark.parametrize("number", sorted(CRITERIA))
def test_criterion(number):
    ok, detail = CRITERIA[number]()
    record(number, ok, detail)
    assert ok, detail


if __name__ == "__main__":
    failed = 0
    for number in sorted(CRITERIA):
        ok, detail = CRITERIA[number]()
        record(number, ok, detail)
        print(RESULTS[number], flush=True)
        failed += not ok
    sys.exit(1 if failed else 0)
