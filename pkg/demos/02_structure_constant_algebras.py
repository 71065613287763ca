"""Finite-dimensional algebras over Z_p from structure-constant tables.

A table assigns every basis product e_i * e_j a coordinate vector; the
constructor checks associativity on all basis triples and rejects bad
tables with the offending triple.
"""

import json

import numpy as np

from zdgforge import (
    AssociativityViolation,
    PrimeField,
    algebra_from_json,
    algebra_to_json,
    direct_sum,
    field_algebra,
    make_algebra,
    zero_mul_algebra,
)

F2 = PrimeField(2)

# The one-generator ring with zero multiplication (additive order p).
n2 = zero_mul_algebra(2)
a = n2.basis_element(0)
print("null ring: a*a =", a * a, " |R| =", n2.size)

# Z_3 as a one-dimensional algebra over itself.
z3 = field_algebra(3)
one = z3.basis_element(0)
print("field: 1*1 == 1:", one * one == one, " ann(1) dim:", z3.annihilator(one).dim)

# A broken table: e0 e0 = e1 and e1 e0 = e0 cannot be associative.
t = np.zeros((2, 2, 2), dtype=int)
t[0, 0, 1] = 1
t[1, 0, 0] = 1
try:
    make_algebra(F2, 2, t)
except AssociativityViolation as exc:
    print("rejected:", exc)

# Direct sums are componentwise; (1, a) squares to (1, 0) in Z_3 + null.
s = direct_sum(field_algebra(3), zero_mul_algebra(3))
x = s.element([1, 1])
print("(1,a)^2 =", (x * x).coords.tolist())

# Algebras serialize to a canonical sparse JSON form and round-trip losslessly.
data = algebra_to_json(s)
print("json:", json.dumps(data))
again = algebra_from_json(data)
print("round trip equal:", np.array_equal(again.table, s.table))
