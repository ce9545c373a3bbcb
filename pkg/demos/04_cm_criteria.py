"""The six Cohen-Macaulayness routes and their certificates.

Route a (no 2-pair cycle) is the complete quadratic-time criterion; the
other five exist to cross-validate it and to produce richer certificates:
facet chains, shelling orders, second matchings, mixed deformations, and
homology profiles.  All computed routes must agree or the library aborts.
"""

import json
import os

from cmgraphs import find_star_labeling, parse_graph_file
from cmgraphs.criteria import cm_routes, cm_verdict

HERE = os.path.dirname(os.path.abspath(__file__))
FIXTURES = os.path.join(HERE, "..", "fixtures")


def show(title, pl):
    print(f"== {title}")
    for route_id, verdict in cm_routes(pl, "abcdef").items():
        certificate = json.dumps(verdict.certificate)
        if len(certificate) > 90:
            certificate = certificate[:87] + "..."
        print(f"  {route_id} {verdict.route:26} {str(verdict.value):5} {certificate}")
    print("  verdict:", cm_verdict(pl, routes="abcdef").value)


g = parse_graph_file(os.path.join(FIXTURES, "example3_1.graph")).graph
show("three matched pairs with upward cross edges (CM)", find_star_labeling(g))

c4 = parse_graph_file(os.path.join(FIXTURES, "c4.graph")).graph
show("the 4-cycle (not CM)", find_star_labeling(c4))

# The homology route is field-parametric; for this class the verdict is
# provably field-free, and the census checks F2 against the rationals.
pl = find_star_labeling(g)
print("\nhomology over the rationals:", cm_routes(pl, "f", field="Q")["f"].value)
