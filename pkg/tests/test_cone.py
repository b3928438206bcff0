from __future__ import annotations

import itertools
import random

import pytest

from qoab.cone import (Cone, cone_rank, is_conical, is_free_cone, is_nonzero_closed,
                       minimal_generators, unit_generators)
from qoab.fgab import GroupPresentation, PresentationMismatch, cyclic_group, free_group


def test_certificates_line_up_with_input_order():
    Z = free_group(1)
    C = Cone.from_coords(Z, [[1], [2], [3]])
    cert = C.contains(Z.element([3]))
    assert cert.coefficients == (0, 0, 1)  # lexicographically least
    assert cert.verify(C)
    assert [list(g.coords) for g in C.generators] == [[1], [2], [3]]


def test_duplicate_generators_collapse():
    Z3 = cyclic_group(3)
    C = Cone.from_coords(Z3, [[1], [4], [2]])
    assert len(C) == 2


def test_torsion_membership_and_lattice_witness():
    P = GroupPresentation(2, [(4, 0)])
    C = Cone.from_coords(P, [[1, 1]])
    cert = C.contains(P.element([-1, 3]))
    assert cert.is_member and cert.verify(C)
    assert not C.contains(P.element([0, -1])).is_member


def test_nonmember_certificate_does_not_verify():
    Z = free_group(1)
    C = Cone.from_coords(Z, [[2]])
    cert = C.contains(Z.element([1]))
    assert not cert.is_member and not cert.verify(C)


def test_bound_caps_only_generators():
    Z = free_group(1)
    C = Cone.from_coords(Z, [[1]])
    assert not C.contains(Z.element([5]), bound=4).is_member
    assert C.contains(Z.element([5]), bound=5).is_member


def test_mismatch():
    C = Cone(free_group(1))
    with pytest.raises(PresentationMismatch):
        C.contains(free_group(1).element([0]))


def test_conical_and_units():
    Z = free_group(1)
    assert is_conical(Cone.from_coords(Z, [[1]]))
    C = Cone.from_coords(Z, [[2], [-2]])
    assert not is_conical(C)
    assert {g.coords for g in unit_generators(C)} == {(2,), (-2,)}
    assert is_conical(Cone(Z))


def test_nonzero_closed_matches_conical_on_random_cones():
    rng = random.Random(4)
    for _ in range(60):
        P = GroupPresentation(2, [[rng.randint(-3, 3) for _ in range(2)]])
        C = Cone.from_coords(P, [[rng.randint(-2, 2) for _ in range(2)] for _ in range(2)])
        assert is_nonzero_closed(C) == is_conical(C)


def test_minimal_generators_and_rank():
    Z2 = free_group(2)
    C = Cone.from_coords(Z2, [[1, 0], [0, 1], [1, 1], [2, 0]])
    assert sorted(g.coords for g in minimal_generators(C)) == [(0, 1), (1, 0)]
    assert cone_rank(C) == 2 and is_free_cone(C)
    D = Cone.from_coords(Z2, [[2, 0], [3, 0]])
    assert not is_free_cone(D)


def test_membership_against_enumeration(rng):
    for _ in range(80):
        P = free_group(2)
        gens = [[rng.randint(-2, 2) for _ in range(2)] for _ in range(2)]
        C = Cone.from_coords(P, gens)
        reach = set()
        for c in itertools.product(range(4), repeat=len(C.generators)):
            reach.add(tuple(sum(k * g.coords[j] for k, g in zip(c, C.generators))
                            for j in range(2)))
        for target in itertools.product(range(-3, 4), repeat=2):
            cert = C.contains(P.element(target), bound=3)
            assert cert.is_member == (target in reach)


def test_certificate_for_equal_elements_with_different_coordinates():
    P = GroupPresentation(1, [(3,)])
    C = Cone.from_coords(P, [[1]])
    a, b = P.element([2]), P.element([5])
    assert a == b
    assert C.contains(a).verify(C)
    assert C.contains(b).verify(C)
