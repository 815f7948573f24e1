import numpy as np
from hypothesis import strategies as st

from oddhole.graph import Graph


@st.composite
def graphs(draw, min_n=0, max_n=10):
    n = draw(st.integers(min_n, max_n))
    bits = draw(st.lists(st.booleans(), min_size=n * (n - 1) // 2, max_size=n * (n - 1) // 2))
    adj = np.zeros((n, n), dtype=bool)
    iu = np.triu_indices(n, 1)
    adj[iu] = bits
    return Graph(adj | adj.T)


def atlas(n):
    """Every graph on ``n <= 7`` vertices, one per isomorphism class."""
    import networkx as nx

    return [
        Graph(nx.to_numpy_array(h, nodelist=range(n), dtype=bool))
        for h in nx.graph_atlas_g()
        if h.number_of_nodes() == n
    ]


def one_vertex_extensions(g):
    """``g`` plus a new last vertex, once for each possible neighbourhood.

    Applied to one representative of every isomorphism class of a
    hereditary class on n vertices, this reaches every member on n + 1
    vertices up to isomorphism (delete any vertex to land in the class).
    """
    n = g.n
    rows = ((np.arange(1 << n)[:, None] >> np.arange(n)) & 1).astype(bool)
    for nb in rows:
        adj = np.zeros((n + 1, n + 1), dtype=bool)
        adj[:n, :n] = g.adj
        adj[n, :n] = nb
        adj[:n, n] = nb
        yield Graph(adj)


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for number in sorted(RESULTS):
            terminalreporter.write_line(RESULTS[number])
