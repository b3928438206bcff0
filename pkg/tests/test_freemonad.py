from __future__ import annotations

import random

import pytest

from qoab.cone import Cone
from qoab.fgab import cyclic_group, free_group
from qoab.freemonad.adjunction import (check_monad_laws, check_triangle_identities,
                                       counit_component, expand_fully, free_object,
                                       free_on_morphism, unit_component)
from qoab.freemonad.setm import SetmError, SetmMorphism, SetmObject
from qoab.freemonad.words import PosWord, Word, eta, mu, random_nested, word_from_json
from qoab.qab import QoGroup, is_po, leq


def test_words_are_canonical():
    assert Word({"x": 2, "y": 0}) == Word([("x", 1), ("x", 1)])
    assert Word({"x": 1}) - Word({"x": 1}) == Word()
    with pytest.raises(ValueError):
        PosWord({"x": -1})


def test_eta_and_mu_examples():
    assert eta("x") == Word({"x": 1})
    w = Word({Word({"x": 2, "y": -1}): 1, Word({"x": 1}): -1})
    assert mu(w) == Word({"x": 1, "y": -1})


def test_json_roundtrip():
    rng = random.Random(1)
    W = random_nested(rng, ["a", "b"], 3)
    assert word_from_json(W.to_json(), nested=2) == W


def test_counit_example():
    Z = free_group(1)
    Q = QoGroup(Z, Cone.from_coords(Z, [[1]]))
    eps = counit_component(Q)
    assert eps(Word({Z.element([3]): 2, Z.element([5]): -1})) == Z.element([1])


def test_setm_validation():
    with pytest.raises(SetmError):
        SetmObject(["a", "b"], ["x"], {"a": "x", "b": "x"})
    with pytest.raises(SetmError):
        SetmObject(["a"], ["x"], {"a": "y"})
    i = SetmObject.inclusion(["x"], ["x", "y"])
    with pytest.raises(SetmError):
        SetmMorphism(i, i, {"x": "y", "y": "y"}, {"x": "x"})


def test_free_object_examples():
    Q = free_object(SetmObject.inclusion(["x"], ["x", "y"]))
    e = Q.group.element
    assert leq(Q, e([0, 0]), e([1, 0]))
    assert not leq(Q, e([0, 0]), e([0, 1])) and not leq(Q, e([0, 1]), e([0, 0]))
    Q0 = free_object(SetmObject.inclusion([], ["x"]))
    assert Q0.cone.generators == ()
    Q1 = free_object(SetmObject.inclusion(["x"], ["x"]))
    assert leq(Q1, Q1.group.element([0]), Q1.group.element([5]))
    assert is_po(Q) and is_po(Q0) and is_po(Q1)


def test_free_on_morphism():
    i = SetmObject.inclusion([], ["x", "y"])
    j = SetmObject.inclusion([], ["z"])
    f = free_on_morphism(SetmMorphism.from_f1(i, j, {"x": "z", "y": "z"}))
    assert f.hom.matrix().to_rows() == [[1, 1]]
    ident = free_on_morphism(SetmMorphism.identity(i))
    assert all(ident(g) == g for g in i.free.group.generators())


def test_free_on_morphism_functorial():
    rng = random.Random(3)
    a = SetmObject(["p"], ["x", "y"], {"p": "x"})
    b = SetmObject(["q", "r"], ["u", "v", "w"], {"q": "u", "r": "v"})
    c = SetmObject(["s"], ["t", "z"], {"s": "t"})
    for _ in range(20):
        f1 = {"x": rng.choice("uv"), "y": rng.choice("uvw")}
        g1 = {"u": "t", "v": "t", "w": rng.choice("tz")}
        f = SetmMorphism.from_f1(a, b, f1)
        g = SetmMorphism.from_f1(b, c, g1)
        Fg, Ff, Fgf = free_on_morphism(g), free_on_morphism(f), free_on_morphism(g @ f)
        assert all(c.is_member for c in Fgf.cone_certificates)
        for _ in range(10):
            x = a.free.group.element([rng.randint(-3, 3) for _ in range(2)])
            assert Fgf(x) == Fg(Ff(x))


def test_unit_component():
    i = SetmObject.standard(1, 2)
    u1, u2 = unit_component(i)
    assert u1["x0"] == Word({"x0": 1}) and u2["p0"] == PosWord({"p0": 1})


def test_expand_fully_oracle():
    inner = Word({"x": 2})
    W = Word({Word({inner: 3}): -1})
    assert expand_fully(W, 3) == {"x": -6}


@pytest.mark.parametrize("k,n", [(k, n) for n in range(4) for k in range(n + 1)])
def test_monad_and_triangle_laws(k, n):
    i = SetmObject.standard(k, n)
    assert check_monad_laws(i, seed=1, n_samples=40).passed
    assert check_triangle_identities(i, seed=1, n_samples=40).passed


def test_triangle_on_finite_target():
    P = cyclic_group(2)
    Q = QoGroup(P, Cone.from_coords(P, [[1]]))
    rep = check_triangle_identities(SetmObject.standard(1, 1), Q, seed=0, n_samples=8)
    assert rep.passed and rep.checks["Ueps.etaU[G]"] == 2


def test_empty_object_is_vacuous():
    i = SetmObject([], [], {})
    assert check_monad_laws(i, n_samples=5).passed
    assert check_triangle_identities(i, n_samples=5).passed


def test_report_records_violations():
    from qoab.freemonad.adjunction import LawReport
    r = LawReport("x", 0)
    r.record("law", False, "w", 1, 2)
    assert not r.passed and r.to_dict()["violations"][0]["witness"] == "w"
