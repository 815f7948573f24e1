"""
Looking for C5, bulls and anchors
=================================

Each finder returns the lexicographically least occurrence, with its
vertices listed in role order.
"""

from oddhole.graph import add_vertex, anchor_graph, bull_graph, cycle_graph, petersen_graph
from oddhole.patterns import find_anchor, find_bull, find_c5

# the Petersen graph has 5-cycles but no triangle, hence no bull
pg = petersen_graph()
print("C5 in Petersen:", find_c5(pg))
print("bull in Petersen:", find_bull(pg))

# bull roles: triangle t1 t2 t3, then the pendants at t1 and t2
print("bull:", find_bull(bull_graph()))

# both anchors: a path p1..p4, a centre complete to it, a vertex apart from it
for joined in (False, True):
    print("anchor (centre-apart edge %s):" % joined, find_anchor(anchor_graph(joined)))

# a 7-hole with one vertex seeing four consecutive hole vertices
g = add_vertex(cycle_graph(7), [0, 1, 2, 3])
print("anchor in C7 + v:", find_anchor(g))

# restrict the search to part of the graph
print("C5 avoiding vertex 0 of Petersen:", find_c5(pg, allowed=range(1, 10)))
