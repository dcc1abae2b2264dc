"""Graded vector and tensor container behaviour."""

from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from hopfchar.core import (COMMUTATIVE, WORD, Generator, GradedVector,
                           Monomial, TensorVector, empty_monomial,
                           monomial_of, monomial_product, tensor_product,
                           vector_product)
from hopfchar.growth import builtin

A = Generator("demo", "a", 1)
B = Generator("demo", "b", 2)
C = Generator("demo", "c", 1)


def mono(*gens):
    return Monomial(COMMUTATIVE, gens)


rationals = st.fractions(max_denominator=40)
monomials = st.lists(st.sampled_from([A, B, C]), max_size=4).map(
    lambda gs: Monomial(COMMUTATIVE, tuple(gs)))
vectors = st.dictionaries(monomials, rationals, max_size=5).map(GradedVector)


def test_commutative_monomials_sort_factors():
    assert mono(B, A) == mono(A, B)
    assert hash(mono(B, A)) == hash(mono(A, B))
    assert mono(B, A).factors == (A, B)


def test_word_monomials_keep_order():
    u = Monomial(WORD, (A, B))
    v = Monomial(WORD, (B, A))
    assert u != v
    assert u.degree == v.degree == 3


def test_monomial_degree_and_predicates():
    assert empty_monomial(COMMUTATIVE).is_empty()
    assert mono(A).is_single()
    assert not mono(A, B).is_single()
    assert mono(A, B, C).degree == 4


def test_monomial_product_concatenates_degrees():
    m = monomial_product(mono(A, B), mono(C))
    assert m.degree == 4
    assert m == mono(A, B, C)


def test_vector_drops_zero_terms():
    v = GradedVector({mono(A): Fraction(0), mono(B): 2})
    assert mono(A) not in v.terms
    assert v.coefficient(mono(B)) == 2
    assert v.coefficient(mono(A)) == 0


def test_vector_arithmetic_and_scaling():
    v = GradedVector.of(mono(A), 2) + GradedVector.of(mono(B), 3)
    w = v - GradedVector.of(mono(A), 2)
    assert w.terms == {mono(B): 3}
    assert v.scale(Fraction(1, 2)).coefficient(mono(A)) == 1
    assert (v * 0).terms == {}


def test_vector_product_is_bilinear_on_samples():
    u = GradedVector({mono(A): 1, mono(B): 2})
    v = GradedVector({mono(C): 3})
    p = vector_product(u, v)
    assert p.coefficient(mono(A, C)) == 3
    assert p.coefficient(mono(B, C)) == 6


def test_unit_and_counit():
    one = GradedVector.unit(COMMUTATIVE)
    assert one.counit(COMMUTATIVE) == 1
    assert GradedVector.of(mono(A)).counit(COMMUTATIVE) == 0


def test_l1_norm_uses_family_weights():
    fam = builtin("pow")
    v = GradedVector({mono(A): 2, mono(A, B): -1})   # degrees 1 and 3
    assert v.l1_norm(fam, 2) == 2 * 2 + 1 * 8
    assert GradedVector().l1_norm(fam, 3) == 0


def test_max_degree():
    v = GradedVector({mono(A): 1, mono(A, B): 1})
    assert v.max_degree() == 3
    assert GradedVector().max_degree() == 0


def test_tensor_vector_basics():
    t = TensorVector.of(mono(A), mono(B), 2) + TensorVector.of(mono(A), mono(B), 1)
    assert t.coefficient(mono(A), mono(B)) == 3
    assert t.l1_count() == 3
    fam = builtin("pow")
    assert t.l1_norm(fam, 1) == 3


def test_tensor_product_multiplies_componentwise():
    t1 = TensorVector.of(mono(A), empty_monomial(COMMUTATIVE))
    t2 = TensorVector.of(mono(B), mono(C))
    p = tensor_product(t1, t2)
    assert p.coefficient(mono(A, B), mono(C)) == 1


def test_vectors_are_not_hashable():
    with pytest.raises(TypeError):
        hash(GradedVector())


@given(vectors, vectors)
def test_addition_commutes(u, v):
    assert (u + v).terms == (v + u).terms


@given(vectors, vectors, vectors)
def test_product_distributes_over_addition(u, v, w):
    left = vector_product(u, v + w)
    right = vector_product(u, v) + vector_product(u, w)
    assert left.terms == right.terms


@given(vectors, rationals)
def test_norm_scales_absolutely(v, q):
    fam = builtin("pow")
    assert v.scale(q).l1_norm(fam, 2) == abs(q) * v.l1_norm(fam, 2)


@given(vectors, vectors)
def test_norm_triangle_inequality(u, v):
    fam = builtin("pow")
    assert (u + v).l1_norm(fam, 2) <= u.l1_norm(fam, 2) + v.l1_norm(fam, 2)
