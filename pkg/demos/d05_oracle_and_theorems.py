"""
Brute force and the structural checks
=====================================

The oracle tries every vertex subset, smallest first, so its hole is a
shortest one. The theorem checkers build on it for small graphs.
"""

from oddhole.corpus import holes_with_attachments, jewels, pyramids, random_bullfree
from oddhole.graph import add_vertex, cycle_graph, petersen_graph
from oddhole.oracle import all_minimum_odd_holes, is_clean, is_pure, oracle_find_odd_hole
from oddhole.validation import validate_graphs

print("Petersen:", oracle_find_odd_hole(petersen_graph()))

# a vertex seeing four consecutive hole vertices makes the hole unclean
g = add_vertex(cycle_graph(7), [0, 1, 2, 3])
hole = all_minimum_odd_holes(g)[0]
print("shortest holes:", all_minimum_odd_holes(g))
print("clean:", is_clean(g, hole), " pure:", is_pure(g))

# a neighbourhood inside a two-edge subpath keeps it clean
print("clean with {0,1,2}:", is_clean(add_vertex(cycle_graph(7), [0, 1, 2]), list(range(7))))

# every check over a few small corpora
for name, graphs, kind in [
    ("bull-free", random_bullfree(300, seed=1), None),
    ("attached holes", holes_with_attachments(200, seed=2), None),
    ("jewels", jewels(200, seed=3), "jewel"),
    ("pyramids", pyramids(200, seed=4), "pyramid"),
]:
    print("--", name)
    print("\n".join(validate_graphs(graphs, kind=kind).lines()))
