"""Zero-divisor graphs: explicit extraction, compressed blow-up form for
two-step graded algebras, isomorphism tests, and canonical fingerprints.

The zero-divisor graph of a finite ring has one vertex per nonzero element z
that kills some nonzero w on either side (z*w = 0 or w*z = 0, w = z allowed),
and an edge between distinct x, y iff x*y = 0 or y*x = 0.  Both one- and
two-sided zero divisors are vertices; there is no option to change that.

For an algebra with R*R^2 = R^2*R = 0 and R^2 != 0 every element is a zero
divisor and the graph is a clique blow-up: the p^s - 1 nonzero elements of
R^2 (s = dim R^2) form a clique joined to everything, and the remaining
vertices split into classes indexed by the projective classes of nonzero
cosets mod R^2, each of size (p-1) * p^s, with adjacency decided by any two
class representatives.
"""

import json

import numpy as np

from .algebra import SCAlgebra
from .errors import CapExceeded
from .isomorph import (
    BASE_LABEL,
    canonical_bytes,
    collapse_twins,
    find_isomorphism,
    fnv64,
)

__all__ = [
    "DEFAULT_ELEMENT_CAP",
    "DEFAULT_ISO_CAP",
    "ZdGraph",
    "BlowupGraph",
    "IsoResult",
    "explicit_graph",
    "compressed_graph",
    "expand",
    "graphs_isomorphic",
    "blowup_isomorphic",
    "fingerprint",
]

DEFAULT_ELEMENT_CAP = 2**16
DEFAULT_ISO_CAP = 4096


class ZdGraph:
    """A simple graph with bitmask adjacency rows and optional vertex labels."""

    __slots__ = ("n", "adj", "labels")

    def __init__(self, n: int, adj, labels=None):
        self.n = int(n)
        adj = tuple(int(a) for a in adj)
        if len(adj) != self.n:
            raise ValueError("adjacency length does not match vertex count")
        for v, row in enumerate(adj):
            if row >> self.n:
                raise ValueError("adjacency bits out of range")
            if row & (1 << v):
                raise ValueError("self loops are not allowed")
        for v in range(self.n):
            for u in range(v):
                if bool(adj[v] & (1 << u)) != bool(adj[u] & (1 << v)):
                    raise ValueError("adjacency must be symmetric")
        self.adj = adj
        self.labels = tuple(labels) if labels is not None else None

    @classmethod
    def from_edges(cls, n: int, edges, labels=None) -> "ZdGraph":
        adj = [0] * n
        for u, v in edges:
            if u == v:
                raise ValueError("self loops are not allowed")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return cls(n, adj, labels)

    @classmethod
    def complete(cls, n: int) -> "ZdGraph":
        full = (1 << n) - 1
        return cls(n, [full ^ (1 << v) for v in range(n)])

    def edges(self):
        out = []
        for v in range(self.n):
            row = self.adj[v] >> (v + 1)
            u = v + 1
            while row:
                if row & 1:
                    out.append((v, u))
                row >>= 1
                u += 1
        return out

    @property
    def num_edges(self) -> int:
        return sum(a.bit_count() for a in self.adj) // 2

    def degree_sequence(self):
        return tuple(sorted(a.bit_count() for a in self.adj))

    def export_edge_list(self) -> str:
        """Plain text: "n m" header then sorted "u v" lines, 0-indexed."""
        lines = [f"{self.n} {self.num_edges}"]
        lines.extend(f"{u} {v}" for u, v in self.edges())
        return "\n".join(lines) + "\n"

    def __repr__(self):
        return f"ZdGraph(n={self.n}, m={self.num_edges})"


class BlowupGraph:
    """Compressed clique blow-up form of a zero-divisor graph.

    ``universal`` counts the vertices of the clique joined to everything
    (the nonzero elements of R^2).  Each class is (multiplicity, clique_flag)
    and every class is implicitly adjacent to the universal clique; ``cross``
    holds the adjacent class pairs.
    """

    __slots__ = ("universal", "classes", "cross")

    def __init__(self, universal: int, classes, cross):
        self.universal = int(universal)
        self.classes = tuple((int(m), bool(f)) for m, f in classes)
        pairs = set()
        k = len(self.classes)
        for i, j in cross:
            if i == j or not (0 <= i < k and 0 <= j < k):
                raise ValueError("invalid cross pair")
            pairs.add((min(i, j), max(i, j)))
        self.cross = frozenset(pairs)

    @property
    def expanded_order(self) -> int:
        return self.universal + sum(m for m, _ in self.classes)

    def to_json(self) -> dict:
        return {
            "universal": self.universal,
            "classes": [{"mult": m, "clique": f} for m, f in self.classes],
            "cross": sorted([i, j] for i, j in self.cross),
        }

    @classmethod
    def from_json(cls, data) -> "BlowupGraph":
        if isinstance(data, str):
            data = json.loads(data)
        return cls(
            data["universal"],
            [(c["mult"], c["clique"]) for c in data["classes"]],
            [tuple(p) for p in data["cross"]],
        )

    def __repr__(self):
        return (
            f"BlowupGraph(universal={self.universal}, "
            f"classes={len(self.classes)}, cross={len(self.cross)})"
        )


class IsoResult:
    """Boolean isomorphism verdict carrying a verified witness when true."""

    __slots__ = ("isomorphic", "witness")

    def __init__(self, isomorphic: bool, witness=None):
        self.isomorphic = bool(isomorphic)
        self.witness = tuple(witness) if witness is not None else None

    def __bool__(self):
        return self.isomorphic

    def __repr__(self):
        return f"IsoResult({self.isomorphic})"


def _rows_to_bitmasks(mat: np.ndarray):
    packed = np.packbits(mat.astype(np.uint8), axis=1, bitorder="little")
    return [int.from_bytes(row.tobytes(), "little") for row in packed]


def _zero_product_matrix(vecs: np.ndarray, table: np.ndarray, p: int) -> np.ndarray:
    """Boolean matrix Z with Z[a, b] iff vec_a * vec_b == 0 under the table.

    One float32 matmul per output coordinate: sums stay below d * (p-1)**2,
    so the float path is exact whenever that bound is under 2**24; larger
    moduli fall back to chunked integer contraction.
    """
    n, d = vecs.shape
    left = np.einsum("ai,ijk->ajk", vecs, table, optimize=True) % p
    if d * (p - 1) ** 2 < 2**24:
        vt = vecs.T.astype(np.float32)
        nonzero = np.zeros((n, n), dtype=bool)
        for k in range(table.shape[2]):
            pk = left[:, :, k].astype(np.float32) @ vt
            nonzero |= np.mod(pk, p) != 0
        return ~nonzero
    zero = np.zeros((n, n), dtype=bool)
    block = max(1, int(8_000_000 // max(1, n * d)))
    for start in range(0, n, block):
        stop = min(start + block, n)
        prods = np.einsum("ajk,bj->abk", left[start:stop], vecs, optimize=True) % p
        zero[start:stop] = ~prods.any(axis=2)
    return zero


def _all_vectors(p: int, dim: int) -> np.ndarray:
    if dim == 0:
        return np.zeros((1, 0), dtype=np.int64)
    return np.indices((p,) * dim).reshape(dim, -1).T.astype(np.int64)


def explicit_graph(ring, cap: int = DEFAULT_ELEMENT_CAP) -> ZdGraph:
    """Zero-divisor graph by direct inspection of all products."""
    size = ring.size
    if size > cap:
        raise CapExceeded(f"ring has {size} elements, cap is {cap}")
    if isinstance(ring, SCAlgebra):
        return _explicit_graph_algebra(ring)
    return _explicit_graph_generic(ring)


def _explicit_graph_algebra(algebra: SCAlgebra) -> ZdGraph:
    p = algebra.field.p
    d = algebra.dim
    vecs = _all_vectors(p, d)[1:]
    n = vecs.shape[0]
    if n == 0:
        return ZdGraph(0, [])
    zero = _zero_product_matrix(vecs, algebra.table, p)
    either = zero | zero.T
    vertex_mask = either.any(axis=1)
    sub = either[np.ix_(vertex_mask, vertex_mask)].copy()
    np.fill_diagonal(sub, False)
    labels = tuple(tuple(int(x) for x in v) for v in vecs[vertex_mask])
    return ZdGraph(int(vertex_mask.sum()), _rows_to_bitmasks(sub), labels)


def _explicit_graph_generic(ring) -> ZdGraph:
    elems = [e for e in ring.elements()]
    zero = ring.zero()
    nonzero = [e for e in elems if e != zero]
    n = len(nonzero)
    kills = [[False] * n for _ in range(n)]
    for i, a in enumerate(nonzero):
        for j, b in enumerate(nonzero):
            if ring.mul(a, b) == zero:
                kills[i][j] = True
    vertex = [any(kills[i][j] or kills[j][i] for j in range(n)) for i in range(n)]
    idx = [i for i in range(n) if vertex[i]]
    remap = {i: k for k, i in enumerate(idx)}
    adj = [0] * len(idx)
    for i in idx:
        for j in idx:
            if i != j and (kills[i][j] or kills[j][i]):
                adj[remap[i]] |= 1 << remap[j]
    labels = tuple(_element_label(nonzero[i]) for i in idx)
    return ZdGraph(len(idx), adj, labels)


def _element_label(e):
    coords = getattr(e, "coords", e)
    try:
        return tuple(int(x) for x in coords)
    except TypeError:
        return (int(coords),)


def _projective_reps(p: int, m: int) -> np.ndarray:
    """Nonzero vectors with first nonzero coordinate 1: one per scalar class."""
    vs = _all_vectors(p, m)[1:]
    if p == 2:
        return vs
    keep = []
    for v in vs:
        first = v[np.nonzero(v)[0][0]]
        if first == 1:
            keep.append(v)
    return np.array(keep, dtype=np.int64)


def compressed_graph(source, class_cap: int = DEFAULT_ISO_CAP) -> BlowupGraph:
    """Exact blow-up form of the zero-divisor graph of a two-step graded
    algebra (accepts a graded presentation or a structure-constant algebra
    with R*R^2 = R^2*R = 0)."""
    algebra = getattr(source, "algebra", source)
    if not isinstance(algebra, SCAlgebra):
        raise TypeError("compressed_graph needs an algebra or graded presentation")
    p = algebra.field.p
    square = algebra.square_ideal()
    s = square.dim
    # Two-step check: everything in R^2 annihilates the algebra on both sides.
    for v in square.basis:
        if (np.einsum("j,ijk->ik", v, algebra.table) % p).any():
            raise ValueError("algebra is not two-step graded (R * R^2 != 0)")
        if ((v @ algebra.table.reshape(algebra.dim, -1)) % p).any():
            raise ValueError("algebra is not two-step graded (R^2 * R != 0)")
    pivots = set()
    for row in square.basis:
        pivots.add(int(np.nonzero(row)[0][0]))
    comp = [i for i in range(algebra.dim) if i not in pivots]
    m = len(comp)
    universal = p**s - 1
    if m == 0:
        return BlowupGraph(universal, [], [])
    reps = _projective_reps(p, m)
    c = reps.shape[0]
    if c > class_cap:
        raise CapExceeded(f"{c} projective classes exceed cap {class_cap}")
    lifted = np.zeros((c, algebra.dim), dtype=np.int64)
    lifted[:, comp] = reps
    # Pair products of lifted representatives; zero-ness is lift-independent
    # because the degree-2 parts of the factors never contribute.
    zero = _zero_product_matrix(lifted, algebra.table, p)
    either = zero | zero.T
    mult = (p - 1) * p**s
    classes = [(mult, bool(zero[i, i])) for i in range(c)]
    cross = [(i, j) for i in range(c) for j in range(i + 1, c) if either[i, j]]
    return BlowupGraph(universal, classes, cross)


def expand(blowup: BlowupGraph, cap: int = DEFAULT_ELEMENT_CAP) -> ZdGraph:
    """Explicit graph realizing a blow-up: class clique/independent blocks,
    complete joins along cross pairs, and a universal clique joined to all."""
    total = blowup.expanded_order
    if total > cap:
        raise CapExceeded(f"expanded graph has {total} vertices, cap is {cap}")
    offsets = []
    pos = blowup.universal
    for m, _ in blowup.classes:
        offsets.append(pos)
        pos += m
    full = (1 << total) - 1
    block_mask = [((1 << m) - 1) << off for (m, _), off in zip(blowup.classes, offsets)]
    uni_mask = (1 << blowup.universal) - 1
    cross_of = [0] * len(blowup.classes)
    for i, j in blowup.cross:
        cross_of[i] |= block_mask[j]
        cross_of[j] |= block_mask[i]
    adj = []
    for v in range(blowup.universal):
        adj.append(full ^ (1 << v))
    for ci, ((m, clique), off) in enumerate(zip(blowup.classes, offsets)):
        for v in range(off, off + m):
            row = uni_mask | cross_of[ci]
            if clique:
                row |= block_mask[ci] ^ (1 << v)
            adj.append(row)
    return ZdGraph(total, adj)


def graphs_isomorphic(g: ZdGraph, h: ZdGraph, cap: int = DEFAULT_ISO_CAP) -> IsoResult:
    """Decide graph isomorphism; any positive answer carries a witness that
    has been verified edge-by-edge."""
    if g.n > cap or h.n > cap:
        raise CapExceeded(f"graphs exceed the {cap}-vertex isomorphism cap")
    if g.n != h.n or g.num_edges != h.num_edges:
        return IsoResult(False)
    if g.degree_sequence() != h.degree_sequence():
        return IsoResult(False)
    mapping = find_isomorphism(list(g.adj), list(h.adj))
    if mapping is None:
        return IsoResult(False)
    return IsoResult(True, mapping)


def _blowup_quotient(blowup: BlowupGraph):
    """Labeled quotient graph encoding the expanded structure."""
    labels = []
    for m, clique in blowup.classes:
        if m == 1:
            labels.append(BASE_LABEL)
        elif clique:
            labels.append(("K", ((BASE_LABEL, m),)))
        else:
            labels.append(("I", ((BASE_LABEL, m),)))
    adj = [0] * len(blowup.classes)
    for i, j in blowup.cross:
        adj[i] |= 1 << j
        adj[j] |= 1 << i
    if blowup.universal > 0:
        u = len(labels)
        if blowup.universal == 1:
            labels.append(BASE_LABEL)
        else:
            labels.append(("K", ((BASE_LABEL, blowup.universal),)))
        adj.append((1 << u) - 1)
        for i in range(u):
            adj[i] |= 1 << u
    return adj, labels


def _canonical_form(obj) -> bytes:
    if isinstance(obj, ZdGraph):
        adj, labels = collapse_twins(list(obj.adj), [BASE_LABEL] * obj.n)
    elif isinstance(obj, BlowupGraph):
        adj, labels = collapse_twins(*_blowup_quotient(obj))
    else:
        raise TypeError("expected a ZdGraph or BlowupGraph")
    return canonical_bytes(list(adj), list(labels))


def blowup_isomorphic(a: BlowupGraph, b: BlowupGraph) -> bool:
    """Whether the expanded graphs of two blow-ups are isomorphic.

    Both are collapsed to their twin-free labeled quotients, which are
    compared by canonical form.  The collapse normalizes away presentation
    differences (e.g. one clique class of multiplicity 2 versus two joined
    classes of multiplicity 1), so the comparison is sound and complete for
    blow-up structures.
    """
    return _canonical_form(a) == _canonical_form(b)


def fingerprint(obj) -> str:
    """Isomorphism-invariant digest: FNV-1a 64 over the canonical form.
    Digests of isomorphic inputs of the same representation kind coincide."""
    return fnv64(_canonical_form(obj))
