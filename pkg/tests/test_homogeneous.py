import networkx as nx
import numpy as np
import pytest
from hypothesis import given, settings

from conftest import graphs
from oddhole.corpus import all_labeled_graphs
from oddhole.generators import Stream, _er, substitute
from oddhole.graph import Graph, complete_graph, cycle_graph, empty_graph, path_graph
from oddhole.homogeneous import SplitError, find_homogeneous_set, is_homogeneous, module_closure, split
from oddhole.oracle import homogeneous_sets_bruteforce


def twin_c7():
    return substitute(cycle_graph(7), 0, complete_graph(2))


def test_find_examples():
    assert find_homogeneous_set(cycle_graph(4)) in ({0, 2}, {1, 3})
    assert find_homogeneous_set(cycle_graph(5)) is None
    assert find_homogeneous_set(path_graph(4)) is None


def test_small_graphs_have_none():
    for n in range(3):
        for g in all_labeled_graphs(n):
            assert find_homogeneous_set(g) is None


def _check_completeness(g):
    x = find_homogeneous_set(g)
    brute = homogeneous_sets_bruteforce(g, first_only=True)
    assert (x is None) == (not brute)
    if x is not None:
        assert 1 < len(x) < g.n
        assert is_homogeneous(g, x)


def test_completeness_exhaustive_small():
    for n in range(3, 7):
        for g in all_labeled_graphs(n):
            _check_completeness(g)


def test_completeness_on_seven_vertices():
    # every 7-vertex graph up to isomorphism
    for h in nx.graph_atlas_g():
        if h.number_of_nodes() == 7:
            _check_completeness(Graph(nx.to_numpy_array(h, nodelist=range(7), dtype=bool)))


@settings(max_examples=300)
@given(graphs(max_n=12))
def test_returned_set_is_homogeneous(g):
    x = find_homogeneous_set(g)
    if x is not None:
        assert 1 < len(x) < g.n
        inside = np.zeros(g.n, dtype=bool)
        inside[list(x)] = True
        for v in np.flatnonzero(~inside):
            seen = g.adj[v, inside]
            assert seen.all() or not seen.any()


def test_module_closure_is_smallest_module():
    g = twin_c7()
    assert list(np.flatnonzero(module_closure(g, [0, 7]))) == [0, 7]
    assert module_closure(g, [0, 1]).all()


def test_deterministic():
    rng = Stream(5)
    for _ in range(50):
        g = _er(rng, 10, 0.5)
        assert find_homogeneous_set(g) == find_homogeneous_set(Graph(g.adj.copy()))


def test_split_twin_c7():
    res = split(twin_c7(), {0, 7})
    assert res.representative == 0
    assert res.g1 == cycle_graph(7)
    assert res.g2 == complete_graph(2)
    assert list(res.map2) == [0, 7]
    assert list(res.map1) == list(range(7))


def test_split_c4():
    res = split(cycle_graph(4), {0, 2})
    # vertices 0, 1, 3 of C4: the path 1-0-3
    assert res.g1 == Graph.from_edge_list(3, [(0, 1), (0, 2)])
    assert res.g2 == empty_graph(2)
    assert list(res.map1) == [0, 1, 3]


@pytest.mark.parametrize(
    "g, x, clause",
    [
        (cycle_graph(5), {0, 1}, "not homogeneous"),
        (cycle_graph(5), {0}, "more than one"),
        (cycle_graph(4), {0, 1, 2, 3}, "proper subset"),
        (cycle_graph(4), {0, 9}, "outside"),
    ],
)
def test_split_errors(g, x, clause):
    with pytest.raises(SplitError, match=clause):
        split(g, x)


@settings(max_examples=300)
@given(graphs(min_n=3, max_n=12))
def test_split_size_identity(g):
    x = find_homogeneous_set(g)
    if x is None:
        return
    res = split(g, x)
    assert res.g1.n + res.g2.n == g.n + 1
    assert res.g1.n < g.n and res.g2.n < g.n
    # both sides are induced subgraphs of g through their maps
    for side, vmap in ((res.g1, res.map1), (res.g2, res.map2)):
        assert (g.adj[np.ix_(vmap, vmap)] == side.adj).all()


def test_modules_avoiding_partition():
    from oddhole.homogeneous import modules_avoiding

    rng = Stream(8)
    for _ in range(200):
        g = _er(rng, 3 + rng.below(10), rng.uniform())
        classes = modules_avoiding(g, 0)
        assert sorted(v for c in classes for v in c) == list(range(1, g.n))
        for c in classes:
            assert len(c) == 1 or is_homogeneous(g, c)
            # maximal: adding any other vertex but 0 breaks the module
            for w in range(1, g.n):
                if w not in c:
                    bigger = c | {w}
                    assert len(bigger) == g.n or not is_homogeneous(g, bigger)
