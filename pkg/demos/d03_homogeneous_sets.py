"""
Homogeneous sets and the split
==============================

A homogeneous set X is seen completely or not at all by every outside
vertex. Splitting shrinks X to one vertex on one side (g1) and keeps G[X]
on the other (g2).
"""

from oddhole.generators import substitute
from oddhole.graph import complete_graph, cycle_graph, path_graph
from oddhole.homogeneous import find_homogeneous_set, split

print("C4:", find_homogeneous_set(cycle_graph(4)))
print("C5:", find_homogeneous_set(cycle_graph(5)), "(prime)")
print("P4:", find_homogeneous_set(path_graph(4)), "(prime)")

# duplicate vertex 0 of a 7-cycle as a true twin: the twins form X
g = substitute(cycle_graph(7), 0, complete_graph(2))
x = find_homogeneous_set(g)
parts = split(g, x)
print("X =", sorted(x), "representative", parts.representative)
print("g1 is C7:", parts.g1 == cycle_graph(7), " g2 is K2:", parts.g2 == complete_graph(2))
print("sizes add up to n + 1:", parts.g1.n + parts.g2.n, "=", g.n + 1)
