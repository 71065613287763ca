import json

import numpy as np
import pytest

from zdgforge.algebra import (
    algebra_from_json,
    algebra_to_json,
    direct_sum,
    field_algebra,
    make_algebra,
    quotient,
    zero_mul_algebra,
)
from zdgforge.constructions import construct, free_m1
from zdgforge.errors import AssociativityViolation, NotAnIdeal
from zdgforge.fpcore import PrimeField, Subspace

F2 = PrimeField(2)


def test_null_generator_ring():
    n = zero_mul_algebra(2)
    a = n.basis_element(0)
    assert (a * a).is_zero()
    assert n.size == 2
    assert n.square_ideal().dim == 0


def test_field_as_algebra():
    z3 = field_algebra(3)
    one = z3.basis_element(0)
    assert one * one == one
    assert z3.annihilator(one).dim == 0


def test_associativity_violation_reported():
    t = np.zeros((2, 2, 2), dtype=int)
    t[0, 0, 1] = 1  # e0 e0 = e1
    t[1, 0, 0] = 1  # e1 e0 = e0
    with pytest.raises(AssociativityViolation) as exc:
        make_algebra(F2, 2, t)
    assert exc.value.triple == (0, 0, 0)


def test_mul_bilinearity_and_zero():
    a = construct("A1", 3).algebra
    x = a.basis_element(0)
    z = a.zero()
    assert (x * z).is_zero()
    y = a.basis_element(1)
    assert (x + y) * (x + y) == x * y + y * x  # squares vanish here


def test_square_ideal_dimensions():
    assert construct("A1", 2).algebra.square_ideal().dim == 14
    assert construct("A2", 3).algebra.square_ideal().dim == 20
    assert zero_mul_algebra(3, 2).square_ideal().dim == 0


def test_annihilator_of_zero_is_everything():
    a = construct("A1", 2).algebra
    assert a.annihilator(a.zero()).dim == a.dim


def test_quotient_by_zero_ideal_keeps_table():
    a = construct("A1", 2).algebra
    q, proj = quotient(a, Subspace.zero(F2, a.dim))
    assert q.dim == a.dim
    assert np.array_equal(q.table, a.table)
    assert np.array_equal(proj.a, np.eye(a.dim, dtype=np.int64))


def test_quotient_free_by_relation_has_dim_20():
    free = free_m1(2, 6)
    rel = np.zeros(free.algebra.dim, dtype=np.int64)
    labels = list(free.algebra.labels)
    rel[labels.index("x3x4")] = 1
    rel[labels.index("x1x2")] = 1  # -1 mod 2
    q, _ = free.algebra.quotient(Subspace(F2, free.algebra.dim, rel[None, :]))
    assert q.dim == 20
    assert q.square_ideal().dim == 14
    # elimination drops the higher monomial and keeps x1x2
    assert "x3x4" not in q.labels
    assert "x1x2" in q.labels


def test_quotient_rejects_non_ideal():
    free = free_m1(2, 6)
    span_x1 = np.zeros(free.algebra.dim, dtype=np.int64)
    span_x1[0] = 1
    with pytest.raises(NotAnIdeal):
        free.algebra.quotient(Subspace(F2, free.algebra.dim, span_x1[None, :]))


def test_ideal_generated_examples():
    free = free_m1(2, 6)
    labels = list(free.algebra.labels)
    rel = np.zeros(free.algebra.dim, dtype=np.int64)
    rel[labels.index("x3x4")] = 1
    rel[labels.index("x1x2")] = 1
    ideal = free.algebra.ideal_generated([free.algebra.element(rel)])
    assert ideal.dim == 1  # degree-2 elements are annihilated by everything
    gen = free.algebra.ideal_generated([free.algebra.basis_element(0)])
    assert gen.dim == 6  # x1 and the five products x1*xj
    assert free.algebra.ideal_generated([free.algebra.zero()]).dim == 0
    # quotient through the generated ideal reproduces the expected square dims
    q, _ = free.algebra.quotient(ideal)
    assert q.square_ideal().dim == 14


def test_direct_sum_componentwise():
    z3 = field_algebra(3)
    n3 = zero_mul_algebra(3)
    s = direct_sum(z3, n3)
    assert s.dim == 2
    one_a = s.element([1, 1])
    prod = one_a * one_a
    assert np.array_equal(prod.coords, [1, 0])
    both = direct_sum(zero_mul_algebra(2), zero_mul_algebra(2))
    assert both.dim == 2
    assert both.square_ideal().dim == 0


def test_direct_sum_field_mismatch():
    with pytest.raises(ValueError):
        direct_sum(field_algebra(2), field_algebra(3))


def test_json_round_trip_canonical():
    a = construct("A2", 3).algebra
    data = algebra_to_json(a)
    text = json.dumps(data, sort_keys=True)
    b = algebra_from_json(json.loads(text))
    assert b.field == a.field
    assert b.labels == a.labels
    assert np.array_equal(b.table, a.table)
    assert json.dumps(algebra_to_json(b), sort_keys=True) == text
    # sparse entries are sorted with coefficients in [1, p)
    for row in data["mul"]:
        for entries in row:
            ks = [k for k, _ in entries]
            assert ks == sorted(ks)
            assert all(1 <= c < 3 for _, c in entries)


def test_elements_iteration_order():
    n = zero_mul_algebra(3, 1)
    coords = [tuple(e.coords) for e in n.elements()]
    assert coords == [(0,), (1,), (2,)]


def test_square_ideal_is_two_sided_and_absorbs_products():
    rng = np.random.default_rng(5)
    a = construct("B2", 3).algebra
    sq = a.square_ideal()
    for v in sq.basis:
        for i in range(0, a.dim, 5):
            e = a.basis_element(i)
            assert sq.contains((a.element(v) * e).coords)
            assert sq.contains((e * a.element(v)).coords)
    for _ in range(25):
        x = a.element(rng.integers(0, 3, a.dim))
        y = a.element(rng.integers(0, 3, a.dim))
        assert sq.contains((x * y).coords)


def test_annihilator_contains_square_ideal_in_graded_algebras():
    rng = np.random.default_rng(9)
    for variant, p in (("A1", 2), ("B2", 3)):
        a = construct(variant, p).algebra
        sq = a.square_ideal()
        for _ in range(10):
            x = a.element(rng.integers(0, p, a.dim))
            assert a.annihilator(x).contains_subspace(sq)
