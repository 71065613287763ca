"""Two-step graded algebras from the varieties <xyz=0, x^2=0, px=0> and
<xyz=0, [x,y]=0, px=0>, their distinguished quotients, and the bilinear-form
invariants that certify the quotients non-isomorphic.

The relatively free algebra of either variety on n generators has basis
{generators} + {degree-2 monomials}; all products of three or more generators
vanish, so the algebra is graded in degrees 1 and 2 and every product depends
only on the degree-1 parts of its factors.

Four named quotients are provided.  Writing m_ij for the degree-2 monomial
x_i x_j:

    A-variants: quotient by m_34 - m_12          (needs n >= 4)
    B-variants: quotient by m_56 - m_12 - m_34   (needs n >= 6)

"1" selects the anticommutative variety (x^2 = 0), "2" the commutative one
([x, y] = 0, odd p for the certificates).
"""

from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .algebra import SCAlgebra
from .errors import EvenCharacteristicUnsupported
from .fpcore import FpMatrix, PrimeField, Subspace, _rref_array

__all__ = [
    "ALTERNATING",
    "SYMMETRIC",
    "VARIANTS",
    "GradedPresentation",
    "RelationForm",
    "Certificate",
    "free_m1",
    "free_m2",
    "construct",
    "relation_form",
    "product_criterion",
    "product_criterion_exhaustive",
    "annihilator_exhaustive",
    "noniso_certificate",
    "nonzero_vectors",
    "proportional",
    "DEFAULT_SEED",
]

ALTERNATING = "alternating"
SYMMETRIC = "symmetric"

# variant name -> (symmetry kind, relation as {pair: coefficient}, min generators)
VARIANTS = {
    "A1": (ALTERNATING, {(2, 3): 1, (0, 1): -1}, 4),
    "B1": (ALTERNATING, {(4, 5): 1, (0, 1): -1, (2, 3): -1}, 6),
    "A2": (SYMMETRIC, {(2, 3): 1, (0, 1): -1}, 4),
    "B2": (SYMMETRIC, {(4, 5): 1, (0, 1): -1, (2, 3): -1}, 6),
}

DEFAULT_SEED = 20260810


def _monomial_pairs(n: int, kind: str):
    if kind == ALTERNATING:
        return [(i, j) for i in range(n) for j in range(i + 1, n)]
    return [(i, j) for i in range(n) for j in range(i, n)]


def _monomial_label(i, j):
    if i == j:
        return f"x{i + 1}^2"
    return f"x{i + 1}x{j + 1}"


@dataclass(frozen=True)
class GradedPresentation:
    """A two-step graded algebra with its defining relation subspace.

    ``algebra`` is the derived structure-constant algebra: generators first,
    then the surviving degree-2 monomials.  ``proj_deg2`` maps free degree-2
    coordinates to the quotient's degree-2 coordinates (identity for the free
    algebras themselves).
    """

    field: PrimeField
    n: int
    kind: str
    monomials: tuple
    relation: Subspace
    algebra: SCAlgebra
    proj_deg2: np.ndarray

    @property
    def deg2_dim(self) -> int:
        return self.algebra.dim - self.n

    def pair_product_free(self, alpha, beta) -> np.ndarray:
        """Product of two degree-1 elements in free degree-2 coordinates."""
        p = self.field.p
        a = self.field.canon(alpha)
        b = self.field.canon(beta)
        out = np.zeros(len(self.monomials), dtype=np.int64)
        for idx, (i, j) in enumerate(self.monomials):
            if self.kind == ALTERNATING:
                out[idx] = (a[i] * b[j] - a[j] * b[i]) % p
            elif i == j:
                out[idx] = (a[i] * b[i]) % p
            else:
                out[idx] = (a[i] * b[j] + a[j] * b[i]) % p
        return out

    def linear_product(self, alpha, beta) -> np.ndarray:
        """Product of two degree-1 elements in quotient degree-2 coordinates."""
        return (self.pair_product_free(alpha, beta) @ self.proj_deg2) % self.field.p

    def element_from_linear(self, alpha):
        coords = np.zeros(self.algebra.dim, dtype=np.int64)
        coords[: self.n] = self.field.canon(alpha)
        return self.algebra.element(coords)


def _free_presentation(p: int, n: int, kind: str) -> GradedPresentation:
    field = PrimeField(p)
    pairs = _monomial_pairs(n, kind)
    d2 = len(pairs)
    dim = n + d2
    index = {pair: n + k for k, pair in enumerate(pairs)}
    table = np.zeros((dim, dim, dim), dtype=np.int64)
    for i in range(n):
        for j in range(n):
            if kind == ALTERNATING:
                if i < j:
                    table[i, j, index[(i, j)]] = 1
                elif j < i:
                    table[i, j, index[(j, i)]] = (-1) % p
            else:
                table[i, j, index[(min(i, j), max(i, j))]] = 1
    labels = tuple(f"x{i + 1}" for i in range(n)) + tuple(_monomial_label(i, j) for i, j in pairs)
    # Associative by construction: every triple product lands in degree >= 3.
    algebra = SCAlgebra(field, table, labels=labels, verify=False)
    return GradedPresentation(
        field=field,
        n=n,
        kind=kind,
        monomials=tuple(pairs),
        relation=Subspace.zero(field, d2),
        algebra=algebra,
        proj_deg2=np.eye(d2, dtype=np.int64),
    )


def free_m1(p: int, n: int) -> GradedPresentation:
    """Relatively free algebra of <xyz=0, x^2=0, px=0> on n generators."""
    if n < 2:
        raise ValueError("need at least two generators")
    return _free_presentation(p, n, ALTERNATING)


def free_m2(p: int, n: int) -> GradedPresentation:
    """Relatively free algebra of <xyz=0, [x,y]=0, px=0> on n generators.

    Construction is allowed at p = 2; the commutative-variety certificates
    are gated to odd p where they are requested.
    """
    if n < 2:
        raise ValueError("need at least two generators")
    return _free_presentation(p, n, SYMMETRIC)


def _relation_vector(pres: GradedPresentation, coeffs: dict) -> np.ndarray:
    vec = np.zeros(len(pres.monomials), dtype=np.int64)
    pos = {pair: k for k, pair in enumerate(pres.monomials)}
    for pair, c in coeffs.items():
        vec[pos[pair]] = c % pres.field.p
    return vec


@lru_cache(maxsize=None)
def construct(variant: str, p: int, n: int = 6) -> GradedPresentation:
    """Build one of the four named quotients on n generators (default 6)."""
    if variant not in VARIANTS:
        raise ValueError(f"unknown variant {variant!r}; expected one of {sorted(VARIANTS)}")
    kind, coeffs, min_n = VARIANTS[variant]
    if n < min_n:
        raise ValueError(f"variant {variant} needs at least {min_n} generators")
    free = free_m1(p, n) if kind == ALTERNATING else free_m2(p, n)
    rel = _relation_vector(free, coeffs)
    full = np.concatenate([np.zeros(free.n, dtype=np.int64), rel])
    ideal = Subspace(free.field, free.algebra.dim, full[None, :])
    quot, proj = free.algebra.quotient(ideal)
    return GradedPresentation(
        field=free.field,
        n=n,
        kind=kind,
        monomials=free.monomials,
        relation=Subspace(free.field, len(free.monomials), rel[None, :]),
        algebra=quot,
        proj_deg2=proj.a[free.n:, free.n:],
    )


class RelationForm:
    """The defining relation seen as a bilinear form on the generator space.

    A degree-2 element sum c_ij * x_i x_j maps to the matrix with c_ij at
    (i, j) and -c_ij (anticommutative) or +c_ij (commutative) at (j, i).
    A generator substitution x -> Qx acts on this matrix by congruence, so
    the rank is invariant under any change of generators and, in particular,
    under the degree-1 map induced by a ring isomorphism.  The rank is used
    only to separate algebras; equal ranks prove nothing.
    """

    __slots__ = ("field", "matrix", "kind")

    def __init__(self, field: PrimeField, matrix, kind: str):
        self.field = field
        m = field.canon(matrix)
        if m.ndim != 2 or m.shape[0] != m.shape[1]:
            raise ValueError("form matrix must be square")
        p = field.p
        if kind == ALTERNATING:
            if np.any(np.diagonal(m)) or not np.array_equal(m.T % p, (-m) % p):
                raise ValueError("alternating form must be skew with zero diagonal")
        elif kind == SYMMETRIC:
            if not np.array_equal(m.T, m):
                raise ValueError("symmetric form must equal its transpose")
        else:
            raise ValueError(f"unknown form kind {kind!r}")
        m.setflags(write=False)
        self.matrix = m
        self.kind = kind

    def rank(self) -> int:
        return _rref_array(self.matrix, self.field.p)[1]

    def congruent(self, q: FpMatrix) -> "RelationForm":
        m = (q.a.T @ self.matrix @ q.a) % self.field.p
        return RelationForm(self.field, m, self.kind)

    def __repr__(self):
        return f"RelationForm(p={self.field.p}, kind={self.kind}, rank={self.rank()})"


def relation_form(variant: str, p: int, n: int = 6) -> RelationForm:
    """Gram matrix of the variant's defining relation on the generator space."""
    if variant not in VARIANTS:
        raise ValueError(f"unknown variant {variant!r}")
    kind, coeffs, min_n = VARIANTS[variant]
    if n < min_n:
        raise ValueError(f"variant {variant} needs at least {min_n} generators")
    field = PrimeField(p)
    m = np.zeros((n, n), dtype=np.int64)
    for (i, j), c in coeffs.items():
        m[i, j] = c % p
        m[j, i] = (-c if kind == ALTERNATING else c) % p
    return RelationForm(field, m, kind)


def proportional(field: PrimeField, alpha, beta) -> bool:
    """True iff beta is a nonzero scalar multiple of alpha (both nonzero)."""
    a = field.canon(alpha)
    b = field.canon(beta)
    if not a.any() or not b.any():
        return False
    return _rref_array(np.vstack([a, b]), field.p)[1] == 1


def product_criterion(variant: str, p: int, alpha, beta, n: int = 6) -> bool:
    """Whether two elements with the given nonzero degree-1 parts multiply
    to zero.

    For the anticommutative variants this must coincide with "beta is a
    nonzero multiple of alpha"; for the commutative variants (odd p) the
    product of two elements outside the square ideal never vanishes.  The
    expected predicate is recomputed and asserted against the actual product
    on every call.
    """
    kind = VARIANTS[variant][0]
    if kind == SYMMETRIC and p == 2:
        raise EvenCharacteristicUnsupported(
            "the commutative-variety product criterion requires odd p"
        )
    pres = construct(variant, p, n)
    a = pres.field.canon(alpha)
    b = pres.field.canon(beta)
    if not a.any() or not b.any():
        raise ValueError("degree-1 parts must be nonzero")
    actual = not pres.linear_product(a, b).any()
    expected = proportional(pres.field, a, b) if kind == ALTERNATING else False
    if actual != expected:
        raise AssertionError(
            f"product criterion mismatch for {variant}, p={p}: "
            f"alpha={a.tolist()}, beta={b.tolist()}, product_zero={actual}"
        )
    return actual


def nonzero_vectors(p: int, n: int) -> np.ndarray:
    """All p**n - 1 nonzero coordinate vectors, lexicographic, as an array."""
    grids = np.indices((p,) * n).reshape(n, -1).T
    return grids[1:].astype(np.int64)


def product_criterion_exhaustive(variant: str, p: int, n: int = 6):
    """Check the product criterion over every ordered pair of nonzero
    degree-1 vectors at once.

    Returns (ok, pairs_checked, mismatches).  Vectorized: for each degree-2
    coordinate of the quotient the coefficient array over all pairs is
    accumulated from the pairwise 2x2 minors (or symmetrized products), so
    memory stays at a few arrays of shape (N, N).
    """
    kind = VARIANTS[variant][0]
    if kind == SYMMETRIC and p == 2:
        raise EvenCharacteristicUnsupported(
            "the commutative-variety product criterion requires odd p"
        )
    pres = construct(variant, p, n)
    v = nonzero_vectors(p, n)
    cnt = v.shape[0]
    cols = [v[:, i].astype(np.int64) for i in range(n)]

    def minor(i, j):
        return (np.outer(cols[i], cols[j]) - np.outer(cols[j], cols[i])) % p

    def sym(i, j):
        if i == j:
            return np.outer(cols[i], cols[i]) % p
        return (np.outer(cols[i], cols[j]) + np.outer(cols[j], cols[i])) % p

    zero_mask = np.ones((cnt, cnt), dtype=bool)
    for qcol in range(pres.proj_deg2.shape[1]):
        coef = np.zeros((cnt, cnt), dtype=np.int64)
        for row, (i, j) in enumerate(pres.monomials):
            w = int(pres.proj_deg2[row, qcol])
            if w == 0:
                continue
            block = minor(i, j) if kind == ALTERNATING else sym(i, j)
            coef = (coef + w * block) % p
        zero_mask &= coef == 0

    if kind == ALTERNATING:
        expected = np.ones((cnt, cnt), dtype=bool)
        for i in range(n):
            for j in range(i + 1, n):
                expected &= minor(i, j) == 0
    else:
        expected = np.zeros((cnt, cnt), dtype=bool)

    mismatches = int(np.count_nonzero(zero_mask != expected))
    return mismatches == 0, cnt * cnt, mismatches


def annihilator_exhaustive(variant: str, p: int, n: int = 6, projective: bool = False):
    """Check the annihilator structure over every nonzero degree-1 part.

    Commutative variants: ann(a) must equal the square ideal exactly.
    Anticommutative variants: ann(a) must equal span{a} plus the square
    ideal (a consequence of the proportionality criterion).  Set projective
    to reduce to one representative per scalar class; annihilators are
    invariant under scaling.  Returns (ok, vectors_checked).
    """
    kind = VARIANTS[variant][0]
    if kind == SYMMETRIC and p == 2:
        raise EvenCharacteristicUnsupported(
            "the commutative-variety annihilator check requires odd p"
        )
    pres = construct(variant, p, n)
    algebra = pres.algebra
    square = algebra.square_ideal()
    vs = nonzero_vectors(p, n)
    if projective:
        keep = [v for v in vs if v[np.nonzero(v)[0][0]] == 1]
        vs = np.array(keep, dtype=np.int64)
    checked = 0
    for alpha in vs:
        el = pres.element_from_linear(alpha)
        ann = algebra.annihilator(el)
        if kind == SYMMETRIC:
            expected = square
        else:
            expected = square.sum(Subspace(pres.field, algebra.dim, el.coords[None, :]))
        if ann != expected:
            return False, checked
        checked += 1
    return True, checked


@dataclass(frozen=True)
class Certificate:
    """Outcome of a non-isomorphism check for a pair of quotients.

    ``rank_separated`` is the sound part: the relation-form rank is preserved
    by the generator map any isomorphism would induce, so differing ranks
    rule an isomorphism out.  The obstruction replay corroborates this by
    sampling invertible matrices P and confirming that the final linear
    condition an isomorphism would force (a signed rearrangement of P's last
    row lying in the kernel of P) never holds.
    """

    pair: tuple
    p: int
    rank_a: int
    rank_b: int
    samples: int
    obstruction_failures: int
    seed: int

    @property
    def rank_separated(self) -> bool:
        return self.rank_a != self.rank_b

    @property
    def certifies(self) -> bool:
        return self.rank_separated

    def to_json(self) -> dict:
        return {
            "pair": list(self.pair),
            "p": self.p,
            "rank_a": self.rank_a,
            "rank_b": self.rank_b,
            "rank_separated": self.rank_separated,
            "samples": self.samples,
            "obstruction_failures": self.obstruction_failures,
            "seed": self.seed,
            "certifies_nonisomorphic": self.certifies,
        }


def _obstruction_vector(kind: str, row: np.ndarray, p: int) -> np.ndarray:
    r = row.astype(np.int64)
    if kind == ALTERNATING:
        w = np.array([r[1], -r[0], r[3], -r[2], -r[5], r[4]], dtype=np.int64)
    else:
        w = np.array([r[1], r[0], r[3], r[2], -r[5], -r[4]], dtype=np.int64)
    return w % p


def _sample_invertible(rng, p: int, n: int) -> np.ndarray:
    while True:
        m = rng.integers(0, p, size=(n, n), dtype=np.int64)
        if _rref_array(m, p)[1] == n:
            return m


def noniso_certificate(pair, p: int, samples: int = 1000, seed: int = DEFAULT_SEED) -> Certificate:
    """Certify that the two variants of a pair are non-isomorphic algebras.

    The canonical pairs are ("A1", "B1") and ("A2", "B2"); a same-variant
    pair is accepted for diagnostics and yields equal ranks, no certificate.
    """
    first, second = pair
    kind_a = VARIANTS[first][0]
    kind_b = VARIANTS[second][0]
    if kind_a != kind_b:
        raise ValueError("certificate pairs must come from the same variety")
    if kind_a == SYMMETRIC and p % 2 == 0:
        raise EvenCharacteristicUnsupported(
            "commutative-variety certificates require odd p"
        )
    rank_a = relation_form(first, p).rank()
    rank_b = relation_form(second, p).rank()
    failures = 0
    run_obstruction = first != second and rank_a != rank_b
    if run_obstruction:
        rng = np.random.default_rng(seed)
        for _ in range(samples):
            m = _sample_invertible(rng, p, 6)
            w = _obstruction_vector(kind_a, m[5], p)
            if ((w @ m.T) % p).any():
                failures += 1
    return Certificate(
        pair=(first, second),
        p=p,
        rank_a=rank_a,
        rank_b=rank_b,
        samples=samples if run_obstruction else 0,
        obstruction_failures=failures,
        seed=seed,
    )
