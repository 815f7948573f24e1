"""
Graphs, graph6 and DIMACS
=========================

Graphs are immutable adjacency matrices on vertices 0..n-1.
"""

from oddhole.formats import parse_dimacs, parse_graph6, write_dimacs, write_graph6
from oddhole.graph import Graph, bfs_distances, complement, cycle_graph, induced_subgraph, is_induced_cycle

# a 7-cycle, built from its edge list
c7 = Graph.from_edge_list(7, [(i, (i + 1) % 7) for i in range(7)])
print(c7, "equals cycle_graph(7):", c7 == cycle_graph(7))

# distances from vertex 0 go up to 3 and back down
print("BFS from 0:", bfs_distances(c7, 0))

# three consecutive cycle vertices induce a path; the map gives old indices
path, vmap = induced_subgraph(c7, {2, 3, 4})
print("induced on {2,3,4}:", path.edges(), "map", vmap)

# the 5-cycle is self-complementary: its complement is the pentagram
print("complement of C5 is a 5-hole:", is_induced_cycle(complement(cycle_graph(5)), [0, 2, 4, 1, 3]))

# graph6 is compact and bit-exact
s = write_graph6(c7)
print("graph6:", s, "round trip ok:", parse_graph6(s) == c7)
print("'A_' is an edge:", parse_graph6("A_").edges())

# DIMACS uses 1-based vertices
text = write_dimacs(cycle_graph(5))
print(text, end="")
print("parsed back:", parse_dimacs(text) == cycle_graph(5))
