from __future__ import annotations

import itertools
import random

import pytest

from qoab.cone import Cone
from qoab.fgab import GroupHom, GroupPresentation, cyclic_group, free_group
from qoab.qab import (QoGroup, antisym_on_morphism, antisymmetrize, check_antisym_triangles,
                      compose, identity_morphism, in_units, is_po, is_trivially_ordered,
                      leq, leq_certificate, morphism_is_order_preserving, order_equivalent,
                      trivial_free_qogroup)


def zq(*gens):
    Z = free_group(1)
    return QoGroup(Z, Cone.from_coords(Z, [[g] for g in gens]))


def test_integer_orders():
    Q1, Q2, Q3 = zq(1), zq(2), zq(2, -2)
    e = Q1.element
    assert all(leq(Q1, e([a]), e([b])) or leq(Q1, e([b]), e([a]))
               for a in range(-4, 5) for b in range(-4, 5))
    assert is_po(Q1) and is_po(Q2) and not is_po(Q3)
    assert not leq(Q2, Q2.element([1]), Q2.element([2]))
    assert not leq(Q2, Q2.element([2]), Q2.element([1]))
    assert leq(Q2, Q2.element([1]), Q2.element([3]))
    z, two = Q3.element([0]), Q3.element([2])
    assert leq(Q3, z, two) and leq(Q3, two, z) and order_equivalent(Q3, z, two)
    A, p = antisymmetrize(Q3)
    assert A.group.canonical_form() == (0, (2,)) and is_trivially_ordered(A)
    assert in_units(Q3, Q3.element([4])) and not in_units(Q3, Q3.element([1]))


def test_leq_certificate_verifies():
    Q = zq(2, 3)
    cert = leq_certificate(Q, Q.element([0]), Q.element([7]))
    assert cert.is_member and cert.verify(Q.cone)


def test_antisymmetrization_is_cached_and_idempotent():
    Q = zq(2, -2)
    assert antisymmetrize(Q) is antisymmetrize(Q)
    A, _ = antisymmetrize(Q)
    AA, _ = antisymmetrize(A)
    assert AA.group.canonical_form() == A.group.canonical_form()


def test_finite_group_antisymmetrization_is_trivial():
    P = cyclic_group(4)
    A, _ = antisymmetrize(QoGroup(P, Cone.from_coords(P, [[1]])))
    assert A.group.describe() == "0"


def test_morphisms():
    Q1, Q2 = zq(1), zq(2)
    Z1, Z2 = Q1.group, Q2.group
    f = morphism_is_order_preserving(GroupHom(Z2, Z1, [Z1.element([1])]), Q2, Q1)
    assert f is not None and f.verify()
    assert morphism_is_order_preserving(GroupHom(Z1, Z2, [Z2.element([1])]), Q1, Q2) is None
    g = morphism_is_order_preserving(GroupHom(Z1, Z2, [Z2.element([2])]), Q1, Q2)
    h = compose(f, g)
    assert h(Z1.element([3])) == Z1.element([6])
    assert compose(f, identity_morphism(Q2)).hom.images == f.hom.images


def test_antisym_on_morphism():
    Q3 = zq(2, -2)
    Q1 = zq(2)
    f = morphism_is_order_preserving(GroupHom(Q1.group, Q3.group, [Q3.group.element([1])]), Q1, Q3)
    Af = antisym_on_morphism(f)
    assert Af.target.group.canonical_form() == (0, (2,))
    assert Af(Af.source.group.element([3])) == Af.target.group.element([1])


def test_antisym_triangles_on_random_objects():
    rng = random.Random(9)
    for _ in range(30):
        P = GroupPresentation(2, [[rng.randint(-3, 3) for _ in range(2)]])
        C = Cone.from_coords(P, [[rng.randint(-2, 2) for _ in range(2)] for _ in range(2)])
        assert check_antisym_triangles(QoGroup(P, C), rng, 16) == []


def test_trivial_free():
    Q = trivial_free_qogroup(["a", "b"])
    assert is_trivially_ordered(Q) and is_po(Q)
    with pytest.raises(ValueError):
        trivial_free_qogroup(["a", "a"])


def test_qogroup_label_validation():
    Z = free_group(1)
    with pytest.raises(ValueError):
        QoGroup(Z, Cone.from_coords(Z, [[1]]), labels=["a", "b"])
