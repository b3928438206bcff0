from __future__ import annotations

import itertools
import random

import pytest

from qoab.cone import Cone
from qoab.fgab import GroupPresentation, free_group
from qoab.freemonad.classify import (NotFreeError, classify_free, defect,
                                     find_signed_permutation_iso, free_iso_class,
                                     is_antichain, is_chain, is_free_qobject, is_lattice,
                                     rank, shape)
from qoab.freemonad.setm import SetmObject
from qoab.qab import QoGroup, is_po


def test_classify_three():
    reps = classify_free(3)
    assert len(reps) == 4
    assert [free_iso_class(q) for q in reps] == [(0, 3), (1, 3), (2, 3), (3, 3)]


def test_example_class():
    Q = SetmObject.inclusion(["x"], ["x", "y"]).free
    assert free_iso_class(Q) == (1, 2)
    assert shape(Q) == "Z-ordered^1 + Z-discrete^1"
    assert rank(Q) == 2 and rank(Q.cone) == 1


def test_doubling_cone_is_not_free():
    Z = free_group(1)
    Q = QoGroup(Z, Cone.from_coords(Z, [[2]]))
    assert not is_free_qobject(Q)
    with pytest.raises(NotFreeError):
        defect(Q)


def test_torsion_and_units_are_not_free():
    P = GroupPresentation(1, [(2,)])
    assert not is_free_qobject(QoGroup(P, Cone(P)))
    Z = free_group(1)
    assert not is_free_qobject(QoGroup(Z, Cone.from_coords(Z, [[1], [-1]])))


def test_basis_change_stays_free():
    Z2 = free_group(2)
    Q = QoGroup(Z2, Cone.from_coords(Z2, [[2, 1], [1, 1]]))
    assert is_free_qobject(Q) and free_iso_class(Q) == (0, 2)


def test_predicates():
    chain, discrete = classify_free(1)
    assert is_chain(chain) and is_lattice(chain) and not is_antichain(chain)
    assert is_antichain(discrete) and not is_chain(discrete)
    assert is_antichain(classify_free(0)[0]) and is_lattice(classify_free(0)[0])


def test_free_objects_are_po_and_free():
    for n in range(4):
        for k in range(n + 1):
            Q = SetmObject.standard(k, n).free
            assert is_po(Q) and is_free_qobject(Q)


def test_class_agrees_with_permutation_search_on_relabeled_objects():
    rng = random.Random(6)
    objs = []
    for _ in range(25):
        n = rng.randint(0, 3)
        X = [f"v{j}" for j in range(n)]
        rng.shuffle(X)
        k = rng.randint(0, n)
        Xp = [f"w{j}" for j in range(k)]
        objs.append(SetmObject(Xp, X, dict(zip(Xp, rng.sample(X, k)))).free)
    for a, b in itertools.combinations(objs, 2):
        same = free_iso_class(a) == free_iso_class(b)
        iso = find_signed_permutation_iso(a, b)
        assert same == (iso is not None)
        if iso is not None:
            for g in a.cone.generators:
                assert iso(g) in b.cone
