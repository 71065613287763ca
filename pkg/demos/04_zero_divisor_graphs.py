"""Zero-divisor graphs, explicit and compressed.

The vertices are the nonzero one- or two-sided zero divisors; x and y are
adjacent when xy = 0 or yx = 0.  Small rings are handled explicitly; the
big graded quotients (10^9+ vertices) use the exact blow-up form instead.
"""

from zdgforge import (
    compressed_graph,
    construct,
    expand,
    explicit_graph,
    field_algebra,
    graphs_isomorphic,
    zn_ring,
)
from zdgforge.algebra import direct_sum

# Small explicit graphs.
g6 = explicit_graph(zn_ring(6))
print("Z_6:", g6.n, "vertices, edges", g6.edges(), "labels", g6.labels)
print("Z_3 (a field):", explicit_graph(field_algebra(3)).n, "vertices")
g22 = explicit_graph(direct_sum(field_algebra(2), field_algebra(2)))
print("Z_2 + Z_2:", g22.n, "vertices,", g22.num_edges, "edge")

# The compressed form of A at p = 2: a universal clique of the 2^14 - 1
# nonzero square-ideal elements, plus 63 classes of 2^14 mutually
# indistinguishable vertices each, with no edges between classes.
b = compressed_graph(construct("A1", 2))
print(
    "A1, p=2 blow-up: universal", b.universal,
    "classes", len(b.classes),
    "multiplicity", b.classes[0][0],
    "cross edges", len(b.cross),
)
print("expanded order:", b.expanded_order, "==", 2**20 - 1)

# Cross-validation at a scaled-down size: with 4 generators the graph has
# only 511 vertices, so the blow-up expansion can be matched vertex-by-vertex
# against the explicit graph computed from raw products.
pres = construct("A1", 2, n=4)
explicit = explicit_graph(pres.algebra)
expanded = expand(compressed_graph(pres))
res = graphs_isomorphic(explicit, expanded)
print("expand(compressed) == explicit on 511 vertices:", bool(res))
print("witness verified edge-by-edge, first entries:", res.witness[:8])

print()
print("edge list export of the Z_6 graph:")
print(g6.export_edge_list())
