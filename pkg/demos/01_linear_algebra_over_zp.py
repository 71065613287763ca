"""Exact linear algebra over Z_p: matrices, row reduction, kernels, subspaces.

Everything here is integer arithmetic with canonical representatives in
[0, p); there is never a float in sight.
"""

from zdgforge import FpMatrix, PrimeField, Subspace, is_invertible, kernel, rref

F5 = PrimeField(5)

# Row reduction detects that the second row is twice the first mod 5.
m = FpMatrix(F5, [[1, 2], [2, 4]])
reduced, rank = rref(m)
print("matrix:", m.a.tolist())
print("rref:  ", reduced.a.tolist(), "rank", rank)

# Kernels: the right null space of [[1, 1]] over Z_2 is spanned by (1, 1).
F2 = PrimeField(2)
k = kernel(FpMatrix(F2, [[1, 1]]))
print("kernel basis:", k.basis.tolist())

# Subspaces are stored by canonical reduced bases, so equality of spans is
# literal equality of objects.
a = Subspace(F5, 3, [[1, 2, 3], [0, 1, 4]])
b = Subspace(F5, 3, [[2, 4, 6], [1, 3, 2]])  # same span, different rows
print("same span:", a == b)

# Sum and intersection satisfy the dimension formula.
u = Subspace(F2, 2, [[1, 1]])
w = Subspace(F2, 2, [[0, 1]])
print(
    "dim(U+W) =", u.sum(w).dim,
    " dim(U/\\W) =", u.intersection(w).dim,
    " dim U + dim W =", u.dim + w.dim,
)

print("identity invertible:", is_invertible(FpMatrix.identity(F2, 3)))
print("[[1,1],[1,1]] invertible over Z_2:", is_invertible(FpMatrix(F2, [[1, 1], [1, 1]])))
