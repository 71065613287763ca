import itertools

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from zdgforge.fpcore import (
    FpMatrix,
    PrimeField,
    Subspace,
    is_invertible,
    kernel,
    rref,
)

F2 = PrimeField(2)
F3 = PrimeField(3)
F5 = PrimeField(5)


def all_vectors(p, n):
    return [np.array(v, dtype=np.int64) for v in itertools.product(range(p), repeat=n)]


def test_prime_validation():
    with pytest.raises(ValueError):
        PrimeField(4)
    with pytest.raises(ValueError):
        PrimeField(1)
    with pytest.raises(ValueError):
        PrimeField(2**15 + 1)
    assert PrimeField(32749).p == 32749  # largest prime below 2**15


def test_rref_identity():
    m = FpMatrix.identity(F2, 3)
    r, rank = rref(m)
    assert rank == 3
    assert r == m


def test_rref_zero():
    m = FpMatrix.zeros(F3, 2, 4)
    r, rank = rref(m)
    assert rank == 0
    assert r == m


def test_rref_dependent_rows_mod5():
    # second row is 2 * first mod 5, so the span is one-dimensional
    m = FpMatrix(F5, [[1, 2], [2, 4]])
    _, rank = rref(m)
    assert rank == 1


def test_kernel_zero_map():
    k = kernel(FpMatrix.zeros(F3, 4, 4))
    assert k.dim == 4


def test_kernel_identity():
    k = kernel(FpMatrix.identity(F3, 4))
    assert k.dim == 0


def test_kernel_row_mod2_matches_enumeration():
    m = FpMatrix(F2, [[1, 1]])
    k = kernel(m)
    # oracle: try all 4 vectors directly
    for v in all_vectors(2, 2):
        in_kernel = (m.a @ v) % 2 == 0
        assert k.contains(v) == bool(in_kernel.all())
    assert k.dim == 1
    assert k.contains([1, 1])


def test_subspace_sum_intersection_examples():
    e1 = Subspace(F3, 2, [[1, 0]])
    e2 = Subspace(F3, 2, [[0, 1]])
    assert e1.sum(e1) == e1
    assert e1.intersection(e2).dim == 0
    # span{e1+e2} + span{e2} covers all of Z_2^2: enumerate the 4 vectors
    u = Subspace(F2, 2, [[1, 1]])
    w = Subspace(F2, 2, [[0, 1]])
    total = u.sum(w)
    assert all(total.contains(v) for v in all_vectors(2, 2))
    assert total.dim == 2


def test_subspace_dimension_mismatch():
    with pytest.raises(ValueError):
        Subspace(F2, 2, [[1, 0]]).sum(Subspace(F2, 3, [[1, 0, 0]]))


def test_is_invertible():
    assert is_invertible(FpMatrix.identity(F2, 3))
    assert not is_invertible(FpMatrix.zeros(F2, 2, 2))
    assert not is_invertible(FpMatrix(F2, [[1, 1], [1, 1]]))
    with pytest.raises(ValueError):
        is_invertible(FpMatrix(F2, [[1, 0]]))


def test_canonical_equality_is_representation_free():
    a = Subspace(F5, 3, [[1, 2, 3], [0, 1, 4]])
    b = Subspace(F5, 3, [[2, 4, 6], [1, 3, 2]])
    assert a == b
    assert hash(a) == hash(b)


@st.composite
def fp_matrices(draw, max_dim=6):
    p = draw(st.sampled_from([2, 3, 5]))
    rows = draw(st.integers(1, max_dim))
    cols = draw(st.integers(1, max_dim))
    entries = draw(
        st.lists(
            st.lists(st.integers(0, p - 1), min_size=cols, max_size=cols),
            min_size=rows,
            max_size=rows,
        )
    )
    return FpMatrix(PrimeField(p), entries)


@given(fp_matrices())
def test_rref_idempotent(m):
    r1, rank1 = rref(m)
    r2, rank2 = rref(r1)
    assert r1 == r2
    assert rank1 == rank2


@given(fp_matrices())
def test_rank_equals_transpose_rank(m):
    assert m.rank() == m.transpose().rank()


@given(fp_matrices())
def test_kernel_vectors_annihilate(m):
    k = kernel(m)
    for row in k.basis:
        assert not ((m.a @ row) % m.field.p).any()
    assert k.dim + m.rank() == m.cols


@given(fp_matrices(max_dim=4), fp_matrices(max_dim=4))
@settings(max_examples=60)
def test_dimension_formula(a, b):
    if a.field != b.field or a.cols != b.cols:
        return
    u = Subspace(a.field, a.cols, a.a)
    v = Subspace(b.field, b.cols, b.a)
    assert u.sum(v).dim + u.intersection(v).dim == u.dim + v.dim
