"""Polynomial identities on finite rings, checked by substitution.

Identities are integer-coefficient polynomials in noncommuting variables
x1..x9 with no constant term.  On a finite ring, "is an identity" is
decidable by brute substitution; multilinear identities only need
generator tuples.
"""

from zdgforge import (
    construct,
    direct_sum_degree,
    holds,
    lower_degree,
    parse,
    verify_sum_lemma,
    zn_ring,
)
from zdgforge.identities import power_identity
from zdgforge.rings import null_ring, ring_direct_sum

# Parsing distributes products over sums and expands powers.
f = parse("x1(x2 - x2^3)")
print("parsed:", f, " lower degree:", lower_degree(f))

# Prime fields satisfy x(y - y^p) = 0; Z_4 does not even satisfy the p=2 one.
for p in (2, 3, 5, 7):
    print(f"Z_{p} satisfies x(y - y^{p}):", bool(holds(zn_ring(p), power_identity(p))))
failure = holds(zn_ring(4), power_identity(2))
print("Z_4 satisfies x(y - y^2):", bool(failure), " counterexample:", failure.counterexample)

# Direct sums: if A satisfies x(y - y^n) and B satisfies x(y - y^m), the sum
# satisfies x(y - y^N) with N = (n-1)(m-1) + 1.
for pa, pb in ((2, 3), (2, 5), (3, 5)):
    n = direct_sum_degree(pa, pb)
    ok = verify_sum_lemma(zn_ring(pa), pa, zn_ring(pb), pb)
    print(f"Z_{pa} + Z_{pb}: x(y - y^{n}) holds: {bool(ok)}")

# The defining identities of the graded quotients, in multilinear mode
# (the algebras have 2^20 or 3^26 elements, exhaustive mode is hopeless).
a1 = construct("A1", 2).algebra
a2 = construct("A2", 3).algebra
print("A1 satisfies xyz:", bool(holds(a1, parse("x1x2x3"), mode="multilinear")))
print("A2 satisfies [x,y]:", bool(holds(a2, parse("x1x2 - x2x1"), mode="multilinear")))

# Witness checks for the graph-determined generating rings: null rings,
# prime fields, and their direct sums all satisfy a separating identity.
tower = ring_direct_sum(ring_direct_sum(null_ring(2), null_ring(5)), zn_ring(3))
print(
    "null(2) + null(5) + Z_3 satisfies x(y - y^3):",
    bool(holds(tower, power_identity(3))),
)
