"""Paired labelings, obstruction cycles, and upward relabeling.

For an in-class graph the library pairs a minimum vertex cover X with the
complementary independent set Y along matching edges.  The alternating
cycles through those pairs are exactly what obstructs Cohen-Macaulayness.
"""

import os

from cmgraphs import (
    StructureError,
    add_edges,
    find_cycle,
    find_star_labeling,
    pairs_graph,
    parse_graph_file,
    relabel_for_double_star,
    unique_perfect_matching,
)
from cmgraphs.pairing import make_labeling

HERE = os.path.dirname(os.path.abspath(__file__))
FIXTURES = os.path.join(HERE, "..", "fixtures")


g = parse_graph_file(os.path.join(FIXTURES, "example3_1.graph")).graph
pl = find_star_labeling(g)
print("pairs:", pl.pairs)
print("cycle witness:", find_cycle(pl))          # None: the graph is CM
print("unique matching:", unique_perfect_matching(pl).to_dict())

# The 4-cycle carries the smallest obstruction: both cross edges between
# the two pairs are present, so swapping partners gives a second matching.
c4 = parse_graph_file(os.path.join(FIXTURES, "c4.graph")).graph
c4_pl = find_star_labeling(c4)
witness = find_cycle(c4_pl)
print("\n4-cycle witness:", witness)
print("second matching:", unique_perfect_matching(c4_pl).certificate)

# A longer cycle can exist even when no 2-pair cycle does; that only
# happens for graphs that are not unmixed.
g3 = add_edges(pairs_graph(3), [("y1", "x2"), ("y2", "x3"), ("y3", "x1")])
pl3 = make_labeling(g3, [("x1", "y1"), ("x2", "y2"), ("x3", "y3")])
print("\nshort cycle:", find_cycle(pl3, max_r=2))
print("any cycle:", find_cycle(pl3))

# Relabeling reorders pairs so cross edges only point upward; the order
# is forced here, so a shuffled labeling snaps back.
from cmgraphs import PairedLabeling

shuffled = PairedLabeling(g, (("x3", "y3"), ("x1", "y1"), ("x2", "y2")))
print("\nrelabeled:", relabel_for_double_star(shuffled).pairs)

# When the cover cannot be matched into the independent set at all, the
# deficient set is reported (such graphs are never unmixed).
bad = parse_graph_file(os.path.join(FIXTURES, "no_matching.graph")).graph
try:
    find_star_labeling(bad)
except StructureError as err:
    print("\nno labeling:", err)
