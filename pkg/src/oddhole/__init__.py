"""Odd-hole detection in bull-free graphs, with a brute-force oracle and
theorem checkers for small graphs."""

from .clean import canonical_shortest_path, detect_clean_shortest_odd_hole, verify_odd_hole
from .driver import (
    Answer,
    DetectOptions,
    InputNotBullFree,
    OracleMismatch,
    Verdict,
    detect_odd_hole_bullfree,
    verify_bull_free,
)
from .formats import ParseError, parse_dimacs, parse_graph6, write_graph6
from .generators import GenSpec, gen_bullfree, gen_jewel, gen_planted_odd_hole, gen_pyramid, gen_random_graph, substitute
from .graph import Graph, GraphError, bfs_distances, complement, from_edge_list, induced_subgraph, is_induced_cycle
from .homogeneous import SplitResult, find_homogeneous_set, split
from .patterns import PatternKind, PatternWitness, find_anchor, find_bull, find_c5

__version__ = "0.1.0"
