"""The four graded quotient algebras and their element-level criteria.

Starting from the relatively free algebra on six generators of either
variety (anticommutative: x^2 = 0; commutative: [x, y] = 0; both with
xyz = 0 and px = 0), quotient by one degree-2 relation:

    A-variants:  x3 x4 = x1 x2
    B-variants:  x5 x6 = x1 x2 + x3 x4

The A/B pairs have identical zero-divisor graph structure but are not
isomorphic; this script shows the element-level facts behind that.
"""

import numpy as np

from zdgforge import (
    annihilator_exhaustive,
    construct,
    free_m1,
    free_m2,
    product_criterion,
    product_criterion_exhaustive,
)

print("free algebra dims: ", free_m1(2, 6).algebra.dim, "and", free_m2(3, 6).algebra.dim)

for variant, p in [("A1", 2), ("B1", 2), ("A2", 3), ("B2", 3)]:
    pres = construct(variant, p)
    print(
        f"{variant}, p={p}: dim {pres.algebra.dim},",
        f"square ideal dim {pres.algebra.square_ideal().dim},",
        f"|R| = {p}^{pres.algebra.dim}",
    )

# Anticommutative quotients: a product of two elements outside the square
# ideal vanishes exactly when their degree-1 parts are proportional.
e = np.eye(6, dtype=int)
print("A1: e1 * e1 zero?", product_criterion("A1", 2, e[0], e[0]))
print("A1: e1 * e2 zero?", product_criterion("A1", 2, e[0], e[1]))
print("B1: e3 * 2e3 zero?", product_criterion("B1", 3, e[2], 2 * e[2]))

ok, pairs, mismatches = product_criterion_exhaustive("A1", 3)
print(f"A1, p=3: criterion checked on {pairs} ordered pairs, mismatches: {mismatches}")

# Commutative quotients at odd p: the annihilator of anything outside the
# square ideal is the square ideal itself, nothing more.
ok, checked = annihilator_exhaustive("A2", 3)
print(f"A2, p=3: annihilator == square ideal for all {checked} degree-1 parts: {ok}")

ok, checked = annihilator_exhaustive("A1", 2)
print(f"A1, p=2: annihilator == span(a) + square ideal for all {checked} parts: {ok}")
