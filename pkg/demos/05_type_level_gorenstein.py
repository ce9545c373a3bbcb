"""Type, socle generators, level-ness and Gorenstein-ness.

All four are combinatorial statements about the deformed graph restricted
to the cover side; no ring is ever constructed.
"""

import os

from cmgraphs import (
    add_edges,
    find_star_labeling,
    invariant_report,
    pairs_graph,
    parse_graph_file,
    restricted_o_full,
)
from cmgraphs.pairing import make_labeling

HERE = os.path.dirname(os.path.abspath(__file__))
FIXTURES = os.path.join(HERE, "..", "fixtures")

g = parse_graph_file(os.path.join(FIXTURES, "example3_1.graph")).graph
pl = find_star_labeling(g)
print("restriction:", restricted_o_full(pl).edge_list())
print("report:", invariant_report(pl).to_dict())

# A bare matching is the Gorenstein (complete intersection) case: the
# restriction is edgeless, its sole minimal cover is empty, the type is 1.
for n in (1, 2, 3):
    pl = make_labeling(
        pairs_graph(n), [(f"x{i}", f"y{i}") for i in range(1, n + 1)]
    )
    report = invariant_report(pl)
    print(f"bare matching n={n}: type={report.cm_type} gorenstein={report.gorenstein}")

# Level-ness fails as soon as the restriction is mixed: here it is the
# path x1 - x3 - x2 with minimal covers {x3} and {x1, x2}.
g = add_edges(pairs_graph(3), [("x1", "y3"), ("x2", "y3")])
pl = make_labeling(g, [("x1", "y1"), ("x2", "y2"), ("x3", "y3")])
print("\nrestriction:", restricted_o_full(pl).edge_list())
print("report:", invariant_report(pl).to_dict())
