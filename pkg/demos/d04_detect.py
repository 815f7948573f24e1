"""
Deciding odd holes in bull-free graphs
======================================

The detector answers YES with a checked odd hole, or NO. The trace shows
which step decided: a C5, a split, or the clean-hole search.
"""

from oddhole.clean import verify_odd_hole
from oddhole.driver import DetectOptions, InputNotBullFree, detect_odd_hole_bullfree
from oddhole.generators import GenSpec, gen_planted_odd_hole, substitute
from oddhole.graph import bull_graph, complete_graph, cycle_graph, petersen_graph


def show(name, g, opts=None):
    v = detect_odd_hole_bullfree(g, opts)
    steps = ", ".join(e.kind for e in v.trace)
    print(f"{name:>14}: {v.answer.value:3} {v.witness or ''}  [{steps}]")
    if v.found:
        assert verify_odd_hole(g, v.witness)


show("C7", cycle_graph(7))
show("C6", cycle_graph(6))
show("Petersen", petersen_graph())
show("twin C7", substitute(cycle_graph(7), 0, complete_graph(2)))

# a planted 9-hole hidden among substituted pieces
g = gen_planted_odd_hole(9, GenSpec(seed=7, n=16))
show("planted 9-hole", g)

# bulls are refused unless the check is switched off
try:
    detect_odd_hole_bullfree(bull_graph())
except InputNotBullFree as exc:
    print("bull refused, witness", exc.witness.vertices)
show("bull, unchecked", bull_graph(), DetectOptions(verify_bull_free=False))
