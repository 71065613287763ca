import itertools

import numpy as np
import pytest

from zdgforge.constructions import (
    Certificate,
    annihilator_exhaustive,
    construct,
    free_m1,
    free_m2,
    noniso_certificate,
    product_criterion,
    product_criterion_exhaustive,
    proportional,
    relation_form,
)
from zdgforge.errors import EvenCharacteristicUnsupported
from zdgforge.fpcore import FpMatrix, PrimeField


def test_free_m1_dimensions():
    assert free_m1(2, 6).algebra.dim == 21
    assert free_m1(3, 2).algebra.dim == 3


def test_free_m1_anticommutes():
    pres = free_m1(5, 2)
    a = pres.algebra
    x1, x2 = a.basis_element(0), a.basis_element(1)
    assert x2 * x1 == -(x1 * x2)
    assert (x1 * x1).is_zero()
    # (x + y)^2 = 0 for every element: exhaustive over the generator plane
    for c1, c2 in itertools.product(range(5), repeat=2):
        v = a.element([c1, c2, 0])
        assert (v * v).is_zero()


def test_free_m2_dimensions_and_commutativity():
    pres = free_m2(3, 6)
    assert pres.algebra.dim == 27
    a = pres.algebra
    for i in range(6):
        for j in range(6):
            assert a.basis_element(i) * a.basis_element(j) == a.basis_element(j) * a.basis_element(i)
    # triple products vanish by the grading
    x1, x2, x3 = (a.basis_element(i) for i in range(3))
    assert ((x1 * x2) * x3).is_zero()
    assert (x1 * (x2 * x3)).is_zero()


@pytest.mark.parametrize(
    "variant,p,square_dim,total_dim",
    [
        ("A1", 2, 14, 20),
        ("B1", 2, 14, 20),
        ("A1", 5, 14, 20),
        ("A2", 3, 20, 26),
        ("B2", 3, 20, 26),
        ("B2", 5, 20, 26),
    ],
)
def test_quotient_dimensions(variant, p, square_dim, total_dim):
    pres = construct(variant, p)
    assert pres.algebra.dim == total_dim
    assert pres.algebra.square_ideal().dim == square_dim


def test_construct_requires_enough_generators():
    with pytest.raises(ValueError):
        construct("B1", 2, n=4)
    assert construct("A1", 2, n=4).algebra.dim == 4 + 6 - 1


def test_products_ignore_degree_two_parts():
    pres = construct("A1", 3)
    rng = np.random.default_rng(7)
    for _ in range(50):
        alpha = rng.integers(0, 3, 6)
        beta = rng.integers(0, 3, 6)
        u = np.concatenate([np.zeros(6, dtype=np.int64), rng.integers(0, 3, 14)])
        a0 = pres.element_from_linear(alpha)
        b0 = pres.element_from_linear(beta)
        assert (a0 + pres.algebra.element(u)) * b0 == a0 * b0
        assert a0 * (b0 + pres.algebra.element(u)) == a0 * b0


def test_product_criterion_examples():
    e = np.eye(6, dtype=np.int64)
    assert product_criterion("A1", 2, e[0], e[0]) is True
    assert product_criterion("A1", 2, e[0], e[1]) is False
    assert product_criterion("B1", 3, e[2], 2 * e[2]) is True
    assert product_criterion("A2", 3, e[0], 2 * e[0]) is False
    with pytest.raises(ValueError):
        product_criterion("A1", 2, np.zeros(6), e[0])
    with pytest.raises(EvenCharacteristicUnsupported):
        product_criterion("A2", 2, e[0], e[0])


def test_product_criterion_matches_scalar_loop_p2():
    # oracle: direct proportionality predicate over all 63 x 63 pairs
    pres = construct("B1", 2)
    vecs = [np.array(v) for v in itertools.product(range(2), repeat=6)][1:]
    for a in vecs[:16]:
        for b in vecs:
            expected = proportional(pres.field, a, b)
            assert product_criterion("B1", 2, a, b) == expected


@pytest.mark.parametrize("variant,p", [("A1", 2), ("B1", 2), ("A1", 3), ("B1", 3)])
def test_product_criterion_exhaustive(variant, p):
    ok, pairs, mismatches = product_criterion_exhaustive(variant, p)
    assert ok
    assert pairs == (p**6 - 1) ** 2
    assert mismatches == 0


def test_relation_form_ranks():
    for p in (2, 3, 5):
        assert relation_form("A1", p).rank() == 4
        assert relation_form("B1", p).rank() == 6
    for p in (3, 5):
        assert relation_form("A2", p).rank() == 4
        assert relation_form("B2", p).rank() == 6


def test_relation_form_shape_checks():
    f = relation_form("A1", 3)
    m = f.matrix
    assert np.array_equal(m.T % 3, (-m) % 3)
    assert not np.diagonal(m).any()
    s = relation_form("A2", 3)
    assert np.array_equal(s.matrix.T, s.matrix)


def test_relation_form_rank_congruence_invariant():
    rng = np.random.default_rng(11)
    f = relation_form("B1", 3)
    field = PrimeField(3)
    found = 0
    while found < 20:
        q = rng.integers(0, 3, (6, 6))
        qm = FpMatrix(field, q)
        if qm.rank() < 6:
            continue
        found += 1
        assert f.congruent(qm).rank() == f.rank()


def test_annihilator_exhaustive_structures():
    ok, checked = annihilator_exhaustive("A1", 2)
    assert ok and checked == 63
    ok, checked = annihilator_exhaustive("A2", 3, projective=True)
    assert ok and checked == 364


def test_noniso_certificate_pairs():
    cert = noniso_certificate(("A1", "B1"), 2, samples=200)
    assert isinstance(cert, Certificate)
    assert (cert.rank_a, cert.rank_b) == (4, 6)
    assert cert.certifies
    assert cert.obstruction_failures == cert.samples == 200
    cert2 = noniso_certificate(("A2", "B2"), 3, samples=200)
    assert (cert2.rank_a, cert2.rank_b) == (4, 6)
    assert cert2.obstruction_failures == 200


def test_noniso_certificate_diagnostic_same_variant():
    cert = noniso_certificate(("A1", "A1"), 2, samples=10)
    assert cert.rank_a == cert.rank_b == 4
    assert not cert.certifies
    assert cert.samples == 0


def test_noniso_certificate_gates_even_p():
    with pytest.raises(EvenCharacteristicUnsupported):
        noniso_certificate(("A2", "B2"), 2)
    with pytest.raises(ValueError):
        noniso_certificate(("A1", "B2"), 3)


def test_certificate_reproducible():
    a = noniso_certificate(("A1", "B1"), 3, samples=50, seed=123)
    b = noniso_certificate(("A1", "B1"), 3, samples=50, seed=123)
    assert a == b


def test_commutative_constructions_allowed_at_p2():
    # building the commutative family at p = 2 is fine; only the
    # rank/annihilator certificates are gated to odd p
    assert free_m2(2, 6).algebra.dim == 27
    assert construct("A2", 2).algebra.dim == 26


def test_fp_vector_inputs_accepted():
    from zdgforge.fpcore import FpVector

    field = PrimeField(2)
    alpha = FpVector(field, [1, 0, 0, 0, 0, 0])
    assert product_criterion("A1", 2, alpha, alpha) is True
