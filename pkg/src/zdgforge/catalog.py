"""Census of the finite rings satisfying xyz = 0, x^2 = 0, 2x = 0, up to
isomorphism, and the graph-determinacy check over them.

Structure reduction: 2x = 0 makes the additive group an elementary abelian
2-group, x^2 = 0 forces xy = yx (characteristic 2) with alternating
multiplication, and xyz = 0 makes R^2 annihilate everything.  Fixing a
complement V of R^2, multiplication factors through a surjective linear map
wedge^2(V) -> R^2, so a ring is exactly the data

    (m, k, K)  with  m = dim V,  k = dim R^2,  K = kernel of that map,

K a subspace of wedge^2(V) of codimension k.  A ring isomorphism induces an
invertible generator map g with (wedge^2 g)(K) = K', and any such g lifts to
a ring isomorphism, so isomorphism classes are GL(m, 2)-orbits of kernels.
This reduction is validated by an independent brute-force oracle that
enumerates raw alternating multiplication tables and buckets them by orbit
closure under GL, see brute_force_census.
"""

import itertools
from dataclasses import dataclass

import numpy as np

from .algebra import SCAlgebra
from .errors import RingAxiomViolation
from .fpcore import PrimeField, Subspace, _rref_array
from .graphs import compressed_graph, explicit_graph, fingerprint, graphs_isomorphic
from .identities import holds, parse

__all__ = [
    "RingPresentation",
    "CatalogEntry",
    "presentation_from_kernel",
    "enumerate_variety_rings",
    "rings_isomorphic",
    "determinacy_report",
    "brute_force_census",
    "validate_in_variety",
    "wedge_pairs",
    "wedge_matrix",
    "enumerate_subspaces",
]

_F2 = PrimeField(2)


def wedge_pairs(m: int):
    return [(i, j) for i in range(m) for j in range(i + 1, m)]


def wedge_matrix(g: np.ndarray, m: int) -> np.ndarray:
    """Matrix of the induced action on wedge^2(F_2^m) for g in GL(m, 2):
    column (i, j) expands (g e_i) ^ (g e_j) over the pair basis."""
    pairs = wedge_pairs(m)
    d = len(pairs)
    w = np.zeros((d, d), dtype=np.int64)
    for col, (i, j) in enumerate(pairs):
        for row, (a, b) in enumerate(pairs):
            w[row, col] = (g[a, i] * g[b, j] + g[b, i] * g[a, j]) % 2
    return w


def _gl2_generators(m: int):
    """Transvection + cycle generate GL(m, 2); inverses included for closure."""
    if m <= 1:
        return [np.eye(max(m, 1), dtype=np.int64)[:m, :m]]
    gens = []
    t = np.eye(m, dtype=np.int64)
    t[0, 1] = 1
    gens.append(t)  # involution, self-inverse
    c = np.zeros((m, m), dtype=np.int64)
    for i in range(m):
        c[(i + 1) % m, i] = 1
    gens.append(c)
    gens.append(c.T)  # inverse cycle
    return gens


def enumerate_subspaces(dim: int, r: int):
    """All r-dimensional subspaces of F_2^dim as canonical rref row arrays."""
    if r == 0:
        yield np.zeros((0, dim), dtype=np.int64)
        return
    for pivots in itertools.combinations(range(dim), r):
        free_cells = [
            (row, col)
            for row, pc in enumerate(pivots)
            for col in range(pc + 1, dim)
            if col not in pivots
        ]
        for bits in itertools.product((0, 1), repeat=len(free_cells)):
            mat = np.zeros((r, dim), dtype=np.int64)
            for row, pc in enumerate(pivots):
                mat[row, pc] = 1
            for (row, col), b in zip(free_cells, bits):
                mat[row, col] = b
            yield mat


def _subspace_key(rows: np.ndarray) -> bytes:
    r, _, _ = _rref_array(rows, 2)
    rank = int((r.any(axis=1)).sum())
    return r[:rank].astype(np.uint8).tobytes()


@dataclass(frozen=True)
class RingPresentation:
    """(m, k, K) data together with the derived structure-constant algebra.

    The algebra basis is m generators followed by k products; generator
    products are the wedge coordinates reduced mod K, everything else is 0.
    """

    m: int
    k: int
    kernel: Subspace
    algebra: SCAlgebra


def presentation_from_kernel(m: int, kernel: Subspace) -> RingPresentation:
    pairs = wedge_pairs(m)
    d = len(pairs)
    if kernel.ambient != d:
        raise ValueError("kernel does not live in wedge^2 of the generator space")
    k = d - kernel.dim
    # Surviving product coordinates: non-pivot columns of the kernel basis.
    pivots = [int(np.nonzero(row)[0][0]) for row in kernel.basis]
    kept = [c for c in range(d) if c not in set(pivots)]
    proj = np.zeros((d, k), dtype=np.int64)
    for col, c in enumerate(kept):
        proj[c, col] = 1
    for row, pc in zip(kernel.basis, pivots):
        proj[pc] = (proj[pc] - row[kept]) % 2
    dim = m + k
    table = np.zeros((dim, dim, dim), dtype=np.int64)
    for idx, (i, j) in enumerate(pairs):
        vec = proj[idx]
        table[i, j, m:] = vec
        table[j, i, m:] = vec
    labels = tuple(f"v{i + 1}" for i in range(m)) + tuple(f"w{i + 1}" for i in range(k))
    algebra = SCAlgebra(_F2, table, labels=labels, verify=True)
    return RingPresentation(m=m, k=k, kernel=kernel, algebra=algebra)


def validate_in_variety(algebra: SCAlgebra):
    """Raise unless the algebra satisfies xyz = 0, x^2 = 0 and 2x = 0.

    xyz is multilinear and checked through the identity engine; x^2 = 0 is
    equivalent, by bilinearity in characteristic 2, to zero squares plus a
    symmetric table, which is checked structurally.
    """
    if algebra.field.p != 2:
        raise RingAxiomViolation("additive exponent is not 2")
    if not holds(algebra, parse("x1x2x3"), mode="multilinear"):
        raise RingAxiomViolation("triple products do not vanish")
    t = algebra.table
    for i in range(algebra.dim):
        if t[i, i].any():
            raise RingAxiomViolation(f"basis square {i} is nonzero", witness=(i, i))
    if not np.array_equal(t, np.swapaxes(t, 0, 1)):
        raise RingAxiomViolation("table is not symmetric (x^2 = 0 fails)")


@dataclass(frozen=True)
class CatalogEntry:
    order: int
    m: int
    k: int
    kernel_canon: bytes
    fingerprint: str
    presentation: RingPresentation

    def to_json(self) -> dict:
        rows = list(self.presentation.kernel.basis.astype(int).tolist())
        return {
            "order": self.order,
            "m": self.m,
            "k": self.k,
            "kernel_basis": rows,
            "fingerprint": self.fingerprint,
            "counts_are": "derived",
        }


def _orbit_partition(m: int, subspace_dim: int):
    """Partition all subspace_dim-subspaces of wedge^2(F_2^m) into
    GL(m, 2)-orbits by closure under the induced generator action."""
    d = len(wedge_pairs(m))
    wedges = [wedge_matrix(g, m) for g in _gl2_generators(m)]
    pool = {}
    for rows in enumerate_subspaces(d, subspace_dim):
        pool[_subspace_key(rows)] = rows
    orbits = []
    seen = set()
    for key in sorted(pool):
        if key in seen:
            continue
        orbit = {key}
        frontier = [pool[key]]
        while frontier:
            rows = frontier.pop()
            for w in wedges:
                img = (rows @ w.T) % 2
                ik = _subspace_key(img)
                if ik not in orbit:
                    orbit.add(ik)
                    frontier.append(pool[ik])
        seen |= orbit
        orbits.append(sorted(orbit))
    return orbits, pool


def _rows_from_key(key: bytes, d: int) -> np.ndarray:
    flat = np.frombuffer(key, dtype=np.uint8).astype(np.int64)
    if d == 0 or flat.size == 0:
        return np.zeros((0, d), dtype=np.int64)
    return flat.reshape(-1, d)


def enumerate_variety_rings(max_order: int = 64, jobs: int = 1):
    """One CatalogEntry per isomorphism class of rings of order <= max_order.

    max_order must be a power of two.  Cells (m, k) are independent; jobs > 1
    runs them in a thread pool.
    """
    if max_order < 2 or max_order & (max_order - 1):
        raise ValueError("max_order must be a power of two, at least 2")
    if max_order > 64:
        import warnings

        warnings.warn(
            f"census above order 64 is untested territory; orbit cells grow "
            f"quickly (requested {max_order})",
            RuntimeWarning,
            stacklevel=2,
        )
    nmax = max_order.bit_length() - 1
    cells = []
    for m in range(1, nmax + 1):
        d = len(wedge_pairs(m))
        for k in range(0, min(d, nmax - m) + 1):
            cells.append((m, k))

    def run_cell(cell):
        m, k = cell
        d = len(wedge_pairs(m))
        orbits, _ = _orbit_partition(m, d - k)
        out = []
        for orbit in orbits:
            canon = orbit[0]
            kernel = Subspace(_F2, d, _rows_from_key(canon, d))
            pres = presentation_from_kernel(m, kernel)
            validate_in_variety(pres.algebra)
            out.append(
                CatalogEntry(
                    order=2 ** (m + k),
                    m=m,
                    k=k,
                    kernel_canon=canon,
                    fingerprint=fingerprint(compressed_graph(pres.algebra)),
                    presentation=pres,
                )
            )
        return out

    if jobs > 1:
        from concurrent.futures import ThreadPoolExecutor

        with ThreadPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(run_cell, cells))
    else:
        results = [run_cell(c) for c in cells]
    entries = [e for chunk in results for e in chunk]
    entries.sort(key=lambda e: (e.order, e.m, e.k, e.kernel_canon))
    return entries


def rings_isomorphic(r: RingPresentation, s: RingPresentation) -> bool:
    """Whether two (m, k, K) presentations are isomorphic rings: same (m, k)
    and kernels in the same GL(m, 2)-orbit (decided by orbit closure)."""
    if (r.m, r.k) != (s.m, s.k):
        return False
    if r.kernel == s.kernel:
        return True
    d = len(wedge_pairs(r.m))
    wedges = [wedge_matrix(g, r.m) for g in _gl2_generators(r.m)]
    target = _subspace_key(s.kernel.basis)
    start = _subspace_key(r.kernel.basis)
    orbit = {start}
    frontier = [r.kernel.basis]
    while frontier:
        rows = frontier.pop()
        for w in wedges:
            img = (rows @ w.T) % 2
            ik = _subspace_key(img)
            if ik == target:
                return True
            if ik not in orbit:
                orbit.add(ik)
                rank = len(ik) // d if d else 0
                frontier.append(_rows_from_key(ik, d))
    return False


def determinacy_report(entries) -> list:
    """Group same-order entries, compare all pairs of zero-divisor graphs,
    and report ring pairs whose graphs are isomorphic.

    Entries are validated to lie in the variety before any comparison.
    Every same-order pair is compared with the explicit-graph isomorphism
    test; fingerprints and the blow-up comparison are recorded as
    corroboration.  Expected outcome for this variety: no violations.
    """
    for e in entries:
        validate_in_variety(e.presentation.algebra)
    by_order = {}
    for e in entries:
        by_order.setdefault(e.order, []).append(e)
    report = []
    for order in sorted(by_order):
        group = by_order[order]
        violations = []
        graphs = [explicit_graph(e.presentation.algebra) for e in group]
        blowups = [compressed_graph(e.presentation.algebra) for e in group]
        for i in range(len(group)):
            for j in range(i + 1, len(group)):
                same_graph = bool(graphs_isomorphic(graphs[i], graphs[j]))
                if same_graph:
                    violations.append(
                        {
                            "first": group[i].to_json(),
                            "second": group[j].to_json(),
                            "rings_isomorphic": rings_isomorphic(
                                group[i].presentation, group[j].presentation
                            ),
                        }
                    )
        report.append(
            {
                "order": order,
                "classes": len(group),
                "violations": violations,
            }
        )
    return report


# -- brute-force oracle ------------------------------------------------------------


def _oracle_valid_tables(d: int):
    """All alternating multiplication tables on F_2^d satisfying xyz = 0.

    A table assigns each pair (i < j) a product vector in F_2^d; squares are
    zero and products are symmetric, so x^2 = 0 and 2x = 0 hold structurally
    and associativity follows from xyz = 0.  Tables are encoded as integers
    with d bits per pair and filtered in vectorized chunks.
    """
    pairs = wedge_pairs(d)
    npairs = len(pairs)
    pair_index = {pr: t for t, pr in enumerate(pairs)}
    total_bits = d * npairs
    total = 1 << total_bits
    mask = (1 << d) - 1
    valid = []
    chunk = 1 << 22
    for start in range(0, total, chunk):
        stop = min(start + chunk, total)
        enc = np.arange(start, stop, dtype=np.int64)
        # Constraints for one pair prune most candidates; compact survivors
        # before moving to the next pair.
        for t in range(npairs):
            if enc.size == 0:
                break
            cv = (enc >> (t * d)) & mask
            ok = np.ones(enc.size, dtype=bool)
            for k in range(d):
                res = np.zeros(enc.size, dtype=np.int64)
                for l in range(d):
                    if l == k:
                        continue
                    bit = (cv >> l) & 1
                    other = pair_index[(min(l, k), max(l, k))]
                    res ^= bit * ((enc >> (other * d)) & mask)
                ok &= res == 0
            enc = enc[ok]
            cv = None
        valid.extend(int(e) for e in enc)
    return valid


def _oracle_transport(enc: int, g: np.ndarray, d: int) -> int:
    """Pull a table back along g: products of g-images re-expressed through
    g inverse; the result is the table of an isomorphic ring."""
    pairs = wedge_pairs(d)
    pair_index = {pr: t for t, pr in enumerate(pairs)}
    cvec = [(enc >> (t * d)) & ((1 << d) - 1) for t in range(len(pairs))]

    def mul_bits(x: int, y: int) -> int:
        out = 0
        for a in range(d):
            if not (x >> a) & 1:
                continue
            for b in range(d):
                if a == b or not (y >> b) & 1:
                    continue
                out ^= cvec[pair_index[(min(a, b), max(a, b))]]
        return out

    ginv = _f2_inverse(g)
    out = 0
    for t, (i, j) in enumerate(pairs):
        gx = _col_bits(g, i)
        gy = _col_bits(g, j)
        prod = mul_bits(gx, gy)
        back = _matvec_bits(ginv, prod, d)
        out |= back << (t * d)
    return out


def _col_bits(g: np.ndarray, i: int) -> int:
    out = 0
    for a in range(g.shape[0]):
        if g[a, i]:
            out |= 1 << a
    return out


def _matvec_bits(g: np.ndarray, v: int, d: int) -> int:
    out = 0
    for a in range(d):
        acc = 0
        for b in range(d):
            if g[a, b] and (v >> b) & 1:
                acc ^= 1
        out |= acc << a
    return out


def _f2_inverse(g: np.ndarray) -> np.ndarray:
    d = g.shape[0]
    aug = np.hstack([g % 2, np.eye(d, dtype=np.int64)])
    r, rank, _ = _rref_array(aug, 2)
    if rank < d:
        raise ValueError("matrix is singular")
    return r[:, d:]


def brute_force_census(max_order: int = 16) -> dict:
    """Independent class counts per order: enumerate raw valid tables on
    total spaces of dimension d and bucket them by GL(d, 2) orbit closure.

    Intended for max_order <= 16 (d <= 4, 2**24 raw tables); complements the
    structured enumeration as a cross-check.
    """
    if max_order < 2 or max_order & (max_order - 1):
        raise ValueError("max_order must be a power of two, at least 2")
    counts = {}
    for d in range(1, max_order.bit_length()):
        valid = _oracle_valid_tables(d)
        gens = _gl2_generators(d)
        seen = set()
        classes = 0
        for enc in valid:
            if enc in seen:
                continue
            classes += 1
            orbit = {enc}
            frontier = [enc]
            while frontier:
                cur = frontier.pop()
                for g in gens:
                    img = _oracle_transport(cur, g, d)
                    if img not in orbit:
                        orbit.add(img)
                        frontier.append(img)
            seen |= orbit
        counts[2**d] = classes
    return counts
