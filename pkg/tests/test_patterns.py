import itertools

import networkx as nx
import numpy as np
import pytest
from hypothesis import given, settings

from conftest import graphs
from oddhole.generators import Stream, _er
from oddhole.graph import (
    Graph,
    add_vertex,
    anchor_graph,
    bull_graph,
    complete_graph,
    cycle_graph,
    induced_subgraph,
    petersen_graph,
)
from oddhole.oracle import oracle_find_pattern
from oddhole.patterns import PatternKind, find_anchor, find_bull, find_c5, find_pattern, matches_roles

REFERENCE = {
    PatternKind.C5: [cycle_graph(5)],
    PatternKind.BULL: [bull_graph()],
    PatternKind.ANCHOR: [anchor_graph(False), anchor_graph(True)],
}


def _from_nx(h):
    return Graph(nx.to_numpy_array(h, nodelist=range(h.number_of_nodes()), dtype=bool))


def _small_and_random():
    # the atlas lists every graph on up to 7 vertices up to isomorphism
    out = [_from_nx(h) for h in nx.graph_atlas_g()]
    rng = Stream(2024)
    out += [_er(rng, 1 + rng.below(12), rng.uniform()) for _ in range(1000)]
    return out


CORPUS = _small_and_random()


def test_c5_examples():
    assert find_c5(cycle_graph(5)).vertices == (0, 1, 2, 3, 4)
    assert find_c5(cycle_graph(7)) is None
    w = find_c5(petersen_graph())
    assert w is not None and matches_roles(petersen_graph(), PatternKind.C5, w.vertices)


def test_bull_examples():
    w = find_bull(bull_graph())
    assert sorted(w.vertices) == [0, 1, 2, 3, 4]
    assert find_bull(petersen_graph()) is None
    assert find_bull(complete_graph(5)) is None


@pytest.mark.parametrize("variant", [False, True])
def test_anchor_is_found_in_itself(variant):
    g = anchor_graph(variant)
    w = find_anchor(g)
    assert w is not None and sorted(w.vertices) == list(range(6))


def test_anchor_examples():
    assert find_anchor(cycle_graph(7)) is None
    g = add_vertex(cycle_graph(7), [0, 1, 2, 3])
    w = find_anchor(g)
    # path c1..c4, the new vertex as centre, a far cycle vertex apart
    assert w.vertices[:5] == (0, 1, 2, 3, 7)
    assert w.vertices[5] == 5
    assert matches_roles(g, PatternKind.ANCHOR, w.vertices)


@pytest.mark.parametrize("kind", list(PatternKind))
def test_agrees_with_oracle(kind):
    found = 0
    for g in CORPUS:
        ours = find_pattern(g, kind)
        ref = oracle_find_pattern(g, kind.value)
        assert (ours is None) == (ref is None), g
        if ours is not None:
            found += 1
            # both report the least vertex set with its least role order
            assert ours.vertices == tuple(ref)
    assert found > 100


def _isomorphic_with_roles(g, kind, roles):
    h, _ = induced_subgraph(g, roles)
    order = np.argsort(np.argsort(roles))
    relabelled = h.adj[np.ix_(order, order)]
    return any((relabelled == ref.adj).all() for ref in REFERENCE[kind])


@pytest.mark.parametrize("kind", list(PatternKind))
def test_witness_reverifies(kind):
    for g in CORPUS:
        w = find_pattern(g, kind)
        if w is not None:
            assert w.kind is kind
            assert len(set(w.vertices)) == len(w.vertices)
            assert _isomorphic_with_roles(g, kind, list(w.vertices))


def _components(g):
    seen, comps = set(), []
    for s in range(g.n):
        if s in seen:
            continue
        comp, todo = {s}, [s]
        while todo:
            for w in g.neighbors[todo.pop()]:
                if w not in comp:
                    comp.add(w)
                    todo.append(w)
        seen |= comp
        comps.append(sorted(comp))
    return comps


@settings(max_examples=200)
@given(graphs(max_n=12))
def test_c5_lives_in_one_component(g):
    per_component = [find_c5(induced_subgraph(g, c)[0]) is not None for c in _components(g)]
    assert (find_c5(g) is not None) == any(per_component)


def test_allowed_restricts_search():
    g = add_vertex(cycle_graph(5), [])
    assert find_c5(g, allowed=[1, 2, 3, 4, 5]) is None
    assert find_c5(g, allowed=range(5)).vertices == (0, 1, 2, 3, 4)


def test_matches_roles_rejects_wrong_order():
    b = bull_graph()
    w = find_bull(b).vertices
    assert matches_roles(b, PatternKind.BULL, w)
    assert not matches_roles(b, PatternKind.BULL, w[::-1])
