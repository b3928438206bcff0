from __future__ import annotations

import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from qoab.fgab import (GroupHom, GroupPresentation, IllDefinedHom, PresentationMismatch,
                       cyclic_group, elem_eq, free_group, hom_compose, identity_hom,
                       in_subgroup, is_torsion_free, quotient_by_subgroup, zero_hom)


def test_canonical_forms():
    assert GroupPresentation(2, [(2, 0), (0, 3)]).canonical_form() == (0, (6,))
    assert GroupPresentation(2, [(2, 4)]).canonical_form() == (1, (2,))
    assert GroupPresentation(3).canonical_form() == (3, ())
    assert GroupPresentation(1, [(1,)]).describe() == "0"
    assert GroupPresentation(2, [(4, 0), (0, 6)]).invariant_factors == (2, 12)


def test_recanonicalizing_is_a_fixed_point():
    P = GroupPresentation(3, [(4, 2, 0), (0, 6, 3), (2, 0, 8)])
    rank, factors = P.canonical_form()
    n = len(factors) + rank
    diag = [[d if r == k else 0 for r in range(n)] for k, d in enumerate(factors)]
    assert GroupPresentation(n, diag).canonical_form() == (rank, factors)


def test_order_and_elements():
    P = GroupPresentation(2, [(2, 0), (0, 4)])
    elems = list(P.elements())
    assert P.order() == 8 == len(elems) == len(set(elems))
    assert free_group(1).order() is None
    with pytest.raises(ValueError):
        list(free_group(1).elements())


presentations = st.integers(1, 3).flatmap(lambda n: st.tuples(
    st.just(n), st.lists(st.lists(st.integers(-4, 4), min_size=n, max_size=n), max_size=3)))


@given(presentations, st.data())
@settings(max_examples=80, deadline=None)
def test_group_axioms_and_equality_oracle(pres, data):
    n, rels = pres
    P = GroupPresentation(n, rels)
    vec = st.lists(st.integers(-6, 6), min_size=n, max_size=n)
    a, b, c = (P.element(data.draw(vec)) for _ in range(3))
    assert (a + b) + c == a + (b + c)
    assert a + b == b + a
    assert a + P.zero() == a
    assert (a - a).is_zero()
    assert (a == b) == elem_eq(a, b)
    assert a.reduced() == a
    assert P.from_canonical_element(a.canonical) == a


def test_presentation_mismatch():
    P, Q = free_group(1), free_group(1)
    with pytest.raises(PresentationMismatch):
        P.element([1]) + Q.element([1])
    with pytest.raises(PresentationMismatch):
        P.element([1, 2])


def test_homs():
    Z, Z2 = free_group(1), cyclic_group(2)
    f = GroupHom(Z, Z2, [Z2.element([1])])
    assert f(Z.element([3])) == Z2.element([1])
    with pytest.raises(IllDefinedHom) as exc:
        GroupHom(cyclic_group(3), Z2, [Z2.element([1])])
    assert exc.value.relation_index == 0
    g = GroupHom(Z, Z, [Z.element([2])])
    h = hom_compose(f, g)
    assert h(Z.element([1])).is_zero()
    assert hom_compose(f, identity_hom(Z)).images == f.images
    assert zero_hom(Z, Z2)(Z.element([5])).is_zero()


def test_quotient_and_subgroups():
    Z2 = free_group(2)
    Q, p = quotient_by_subgroup(Z2, [Z2.element([2, 0])])
    assert Q.canonical_form() == (1, (2,))
    assert p(Z2.element([2, 0])).is_zero()
    assert in_subgroup(Z2.element([4, 6]), [Z2.element([2, 0]), Z2.element([0, 3])])
    assert not in_subgroup(Z2.element([1, 0]), [Z2.element([2, 0])])
    assert is_torsion_free(Z2) and not is_torsion_free(Q)


def test_random_quotient_orders():
    rng = random.Random(2)
    for _ in range(50):
        P = GroupPresentation(2, [[rng.randint(-4, 4) for _ in range(2)] for _ in range(2)])
        if P.is_finite:
            assert P.order() == len(set(P.elements()))
