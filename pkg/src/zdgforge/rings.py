"""Element-level finite rings given by additive generator orders and
generator products.

This covers composite-additive-order rings such as Z_6, which are not
algebras over a prime field.  Elements are coordinate tuples (a_1, ..., a_t)
with a_k taken mod the k-th generator order; multiplication is the bilinear
extension of the generator product table.  Structure-constant algebras
satisfy the same element protocol (elements/add/neg/mul/int_mul/zero), so
the identity engine and graph extraction work on either kind.
"""

import itertools
import math

from .algebra import SCAlgebra
from .errors import RingAxiomViolation

__all__ = [
    "TableRing",
    "ring_table",
    "zn_ring",
    "null_ring",
    "ring_direct_sum",
]


class TableRing:
    """A finite ring on a direct sum of Z_{n_i} groups with generator products ``prod[i][j]``."""

    __slots__ = ("orders", "prod")

    def __init__(self, orders, prod, verify: bool = True):
        self.orders = tuple(int(n) for n in orders)
        if any(n < 1 for n in self.orders):
            raise ValueError("additive orders must be positive")
        t = len(self.orders)
        table = []
        for i in range(t):
            row = []
            for j in range(t):
                c = tuple(int(x) % self.orders[k] for k, x in enumerate(prod[i][j]))
                if len(c) != t:
                    raise ValueError("product vectors must have one entry per generator")
                row.append(c)
            table.append(tuple(row))
        self.prod = tuple(table)
        if verify:
            self._verify()

    def _verify(self):
        t = len(self.orders)
        # Bilinear extension is well defined only if each product is killed
        # by both factors' additive orders; this is where incompatible
        # (distributivity-breaking) tables get rejected.
        for i in range(t):
            for j in range(t):
                for n in (self.orders[i], self.orders[j]):
                    scaled = tuple(
                        (n * c) % self.orders[k] for k, c in enumerate(self.prod[i][j])
                    )
                    if any(scaled):
                        raise RingAxiomViolation(
                            f"product of generators {i}, {j} is not annihilated "
                            f"by their additive orders",
                            witness=(i, j),
                        )
        # Associativity on generator triples; bilinearity carries it to all
        # elements.
        for i in range(t):
            for j in range(t):
                for k in range(t):
                    gi, gj, gk = self._gen(i), self._gen(j), self._gen(k)
                    if self.mul(self.mul(gi, gj), gk) != self.mul(gi, self.mul(gj, gk)):
                        raise RingAxiomViolation(
                            f"associativity fails on generator triple ({i}, {j}, {k})",
                            witness=(i, j, k),
                        )

    def _gen(self, i):
        return tuple(1 if k == i else 0 for k in range(len(self.orders)))

    # -- ring protocol ---------------------------------------------------------

    @property
    def size(self) -> int:
        return math.prod(self.orders)

    def elements(self):
        for combo in itertools.product(*(range(n) for n in self.orders)):
            yield combo

    def zero(self):
        return (0,) * len(self.orders)

    def add(self, a, b):
        return tuple((x + y) % n for x, y, n in zip(a, b, self.orders))

    def neg(self, a):
        return tuple((-x) % n for x, n in zip(a, self.orders))

    def int_mul(self, c, a):
        return tuple((c * x) % n for x, n in zip(a, self.orders))

    def mul(self, a, b):
        out = [0] * len(self.orders)
        for i, x in enumerate(a):
            if not x:
                continue
            for j, y in enumerate(b):
                if not y:
                    continue
                pv = self.prod[i][j]
                for k, c in enumerate(pv):
                    out[k] = (out[k] + x * y * c) % self.orders[k]
        return tuple(out)

    def additive_exponent(self) -> int:
        return math.lcm(*self.orders)

    def generators(self):
        return [self._gen(i) for i in range(len(self.orders))]

    def __repr__(self):
        return f"TableRing(orders={self.orders})"


def ring_table(orders, products, verify: bool = True) -> TableRing:
    """Build a ring from additive orders and a sparse product map.

    ``products`` maps generator index pairs (i, j) to coefficient vectors;
    missing pairs multiply to zero.  The table is validated (order
    compatibility and associativity) with a witness on failure.
    """
    t = len(orders)
    prod = [[(0,) * t for _ in range(t)] for _ in range(t)]
    for (i, j), vec in products.items():
        prod[i][j] = tuple(vec)
    return TableRing(orders, prod, verify=verify)


def zn_ring(n: int) -> TableRing:
    """The ring Z_n of residues mod n."""
    return ring_table([n], {(0, 0): (1,)})


def null_ring(n: int) -> TableRing:
    """One generator of additive order n with all products zero."""
    return ring_table([n], {})


def _as_table_ring(ring) -> TableRing:
    if isinstance(ring, TableRing):
        return ring
    if isinstance(ring, SCAlgebra):
        p = ring.field.p
        prod = {}
        for i in range(ring.dim):
            for j in range(ring.dim):
                vec = tuple(int(c) for c in ring.table[i, j])
                if any(vec):
                    prod[(i, j)] = vec
        return ring_table([p] * ring.dim, prod, verify=False)
    raise TypeError(f"cannot interpret {type(ring).__name__} as a finite ring")


def ring_direct_sum(a, b):
    """Direct sum of two rings; componentwise operations.

    Same-field structure-constant algebras keep that representation,
    everything else goes through the generator-table form (this is how
    mixed-characteristic sums like Z_2 (+) Z_3 arise).
    """
    if isinstance(a, SCAlgebra) and isinstance(b, SCAlgebra) and a.field == b.field:
        return a.direct_sum(b)
    ta, tb = _as_table_ring(a), _as_table_ring(b)
    orders = ta.orders + tb.orders
    off = len(ta.orders)
    products = {}
    for i in range(off):
        for j in range(off):
            vec = ta.prod[i][j]
            if any(vec):
                products[(i, j)] = vec + (0,) * len(tb.orders)
    for i in range(len(tb.orders)):
        for j in range(len(tb.orders)):
            vec = tb.prod[i][j]
            if any(vec):
                products[(off + i, off + j)] = (0,) * off + vec
    return ring_table(orders, products, verify=False)
