from __future__ import annotations

import pytest

from qoab.cone import Cone
from qoab.fgab import GroupPresentation, cyclic_group
from qoab.freemonad.em import (EmAlgebra, EmError, check_em_laws, cyclic_algebra, em_check,
                               em_to_qab, em_violations, qab_to_em, roundtrip_em,
                               roundtrip_qab, z2_full_cone_algebra)
from qoab.freemonad.words import PosWord, Word
from qoab.qab import QoGroup, is_po, is_trivially_ordered


def test_z2_algebra():
    alg = z2_full_cone_algebra()
    assert em_check(alg)
    assert alg.h1(Word({"y": 2})) == "x" and alg.h2(PosWord({"y": 3})) == "y"
    Q = em_to_qab(alg)
    assert Q.group.canonical_form() == (0, (2,))
    assert not is_po(Q)
    assert roundtrip_em(alg)["identity"]
    assert check_em_laws(alg, seed=0, n_samples=64).passed


def test_tabulating_z2_full_cone_gives_same_tables():
    P = cyclic_group(2)
    alg = qab_to_em(QoGroup(P, Cone.from_coords(P, [[1]])))
    ref = z2_full_cone_algebra()
    rename = {"x": "[0]", "y": "[1]"}
    assert {(rename[a], rename[b]): rename[c] for (a, b), c in ref.add1.items()} == alg.add1
    assert sorted(alg.X_prime) == ["[0]", "[1]"]


def test_non_associative_table_rejected():
    alg = z2_full_cone_algebra()
    alg.add1[("y", "y")] = "y"
    assert not em_check(alg)
    with pytest.raises(EmError):
        em_to_qab(alg)


def test_perturbed_monoid_table_breaks_i():
    alg = z2_full_cone_algebra()
    alg.add2[("y", "y")] = "y"
    laws = {v["law"] for v in em_violations(alg)}
    assert laws == {"i_additive"}


def test_missing_entry_reported():
    alg = z2_full_cone_algebra()
    del alg.add1[("x", "y")]
    assert {"law": "total", "args": ["x", "y"], "part": "X"} in em_violations(alg)


def test_trivial_and_cyclic_algebras():
    Q = em_to_qab(cyclic_algebra(1))
    assert Q.group.describe() == "0"
    Q3 = em_to_qab(cyclic_algebra(3))
    assert Q3.group.canonical_form() == (0, (3,)) and is_trivially_ordered(Q3)


def test_qab_roundtrips():
    P = cyclic_group(4)
    assert roundtrip_qab(QoGroup(P, Cone.from_coords(P, [[2]])))["identity"]
    T = GroupPresentation(0)
    alg = qab_to_em(QoGroup(T, Cone(T)))
    assert alg.X == ("[]",)
    P2 = GroupPresentation(2, [(2, 0), (0, 2)])
    assert roundtrip_qab(QoGroup(P2, Cone.from_coords(P2, [[1, 0]])))["identity"]


def test_infinite_group_rejected():
    P = GroupPresentation(1)
    with pytest.raises(EmError):
        qab_to_em(QoGroup(P, Cone(P)))


def test_dict_roundtrip():
    alg = z2_full_cone_algebra()
    back = EmAlgebra.from_dict(alg.to_dict())
    assert back.add1 == alg.add1 and back.carrier == alg.carrier
