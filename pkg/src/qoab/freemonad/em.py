"""Eilenberg-Moore algebras of ``T = UF`` as finite operation tables.

An algebra on ``i: X' -> X`` is determined by its values on short words:
a binary sum, a negation and a zero on ``X``, and a binary sum and zero on
``X'``.  The algebra laws then amount to ``X`` being an abelian group,
``X'`` a commutative monoid, and ``i`` a monoid map.  The structure map on
arbitrary words is the induced evaluation.
"""

from __future__ import annotations

import itertools
import random
from typing import Mapping, Optional

from ..cone import Cone
from ..fgab import GroupElement, GroupPresentation
from ..qab import QoGroup
from .adjunction import LawReport, T_of_i
from .setm import SetmObject
from .words import PosWord, Word, mu, random_nested, random_word


class EmError(ValueError):
    pass


class EmAlgebra:
    """Operation tables on an injective set map.

    ``add1`` and ``add2`` map ordered pairs of labels to labels.  Totality is
    not enforced here; :func:`em_violations` reports missing entries.
    """

    def __init__(self, carrier: SetmObject, add1: Mapping, neg: Mapping, zero1: str,
                 add2: Mapping, zero2: str):
        self.carrier = carrier
        self.add1 = {tuple(k): v for k, v in add1.items()}
        self.neg = dict(neg)
        self.zero1 = zero1
        self.add2 = {tuple(k): v for k, v in add2.items()}
        self.zero2 = zero2

    @property
    def X(self) -> tuple:
        return self.carrier.X

    @property
    def X_prime(self) -> tuple:
        return self.carrier.X_prime

    def h1(self, w: Word) -> str:
        """Structure map on the group component: evaluate a word over ``X``."""
        acc = self.zero1
        for x, c in w.items:
            y = x if c > 0 else self.neg[x]
            for _ in range(abs(c)):
                acc = self.add1[acc, y]
        return acc

    def h2(self, w: PosWord) -> str:
        """Structure map on the monoid component."""
        acc = self.zero2
        for x, c in w.items:
            for _ in range(c):
                acc = self.add2[acc, x]
        return acc

    def to_dict(self) -> dict:
        return {
            "kind": "em_algebra",
            **self.carrier.to_dict(),
            "add1": [[a, b, c] for (a, b), c in sorted(self.add1.items())],
            "neg": dict(sorted(self.neg.items())),
            "zero1": self.zero1,
            "add2": [[a, b, c] for (a, b), c in sorted(self.add2.items())],
            "zero2": self.zero2,
        }

    @classmethod
    def from_dict(cls, data: Mapping) -> "EmAlgebra":
        carrier = SetmObject(data["X_prime"], data["X"], data["i"])
        return cls(carrier, {(a, b): c for a, b, c in data["add1"]}, data["neg"], data["zero1"],
                   {(a, b): c for a, b, c in data["add2"]}, data["zero2"])

    def __repr__(self) -> str:
        return f"EmAlgebra(X={list(self.X)}, X_prime={list(self.X_prime)})"


def _table_violations(S, add, zero, neg=None) -> list[dict]:
    out = []
    for a, b in itertools.product(S, repeat=2):
        if add.get((a, b)) not in S:
            out.append({"law": "total", "args": [a, b]})
    if zero not in S:
        out.append({"law": "zero_in_carrier", "args": [zero]})
    if neg is not None:
        for a in S:
            if neg.get(a) not in S:
                out.append({"law": "total_neg", "args": [a]})
    if out:
        return out
    for a, b, c in itertools.product(S, repeat=3):
        if add[add[a, b], c] != add[a, add[b, c]]:
            out.append({"law": "associative", "args": [a, b, c]})
    for a, b in itertools.product(S, repeat=2):
        if add[a, b] != add[b, a]:
            out.append({"law": "commutative", "args": [a, b]})
    for a in S:
        if add[a, zero] != a:
            out.append({"law": "identity", "args": [a]})
        if neg is not None and add[a, neg[a]] != zero:
            out.append({"law": "inverse", "args": [a]})
    return out


def em_violations(alg: EmAlgebra) -> list[dict]:
    """Every failed table law, each with the arguments that break it."""
    out = [dict(v, part="X") for v in _table_violations(alg.X, alg.add1, alg.zero1, alg.neg)]
    out += [dict(v, part="X'") for v in _table_violations(alg.X_prime, alg.add2, alg.zero2)]
    if out:
        return out
    i = alg.carrier.i
    if i.get(alg.zero2) != alg.zero1:
        out.append({"law": "i_preserves_zero", "part": "i", "args": [alg.zero2]})
    for a, b in itertools.product(alg.X_prime, repeat=2):
        if i[alg.add2[a, b]] != alg.add1[i[a], i[b]]:
            out.append({"law": "i_additive", "part": "i", "args": [a, b]})
    return out


def em_check(alg: EmAlgebra) -> bool:
    return not em_violations(alg)


def check_em_laws(alg: EmAlgebra, seed: int = 0, n_samples: int = 256) -> LawReport:
    """The algebra laws ``h . eta = id`` and ``h . mu = h . T h`` on sampled words.

    Also checks that ``h`` commutes with the carrier map ``i``.  Requires
    :func:`em_check` to pass, since ``h`` is the evaluation by the tables.
    """
    if not em_check(alg):
        raise EmError("tables fail the algebra laws")
    rng = random.Random(seed)
    report = LawReport("em_laws", seed)
    for x in alg.X:
        report.record("unit[X]", alg.h1(Word.unit(x)) == x, x)
    for x in alg.X_prime:
        report.record("unit[X']", alg.h2(PosWord.unit(x)) == x, x)
    for _ in range(n_samples if alg.X else 0):
        W = random_nested(rng, list(alg.X), 2, -3, 3, Word)
        a, b = alg.h1(mu(W)), alg.h1(W.map_keys(alg.h1))
        report.record("mult[X]", a == b, W.to_json(), a, b)
    for _ in range(n_samples if alg.X_prime else 0):
        W = random_nested(rng, list(alg.X_prime), 2, 0, 3, PosWord)
        a, b = alg.h2(mu(W)), alg.h2(W.map_keys(alg.h2))
        report.record("mult[X']", a == b, W.to_json(), a, b)
        w = random_word(rng, list(alg.X_prime), 0, 3, PosWord)
        a, b = alg.carrier.i[alg.h2(w)], alg.h1(T_of_i(alg.carrier, w))
        report.record("square", a == b, w.to_json(), a, b)
    return report


def em_to_qab(alg: EmAlgebra) -> QoGroup:
    """The qo-group of an algebra: the group of the ``X`` tables, ordered by ``i(X')``.

    The group is first presented on one generator per label, with relations
    ``e_x + e_y - e_(x+y)`` and ``e_0``; its invariant factors then give the
    diagonal presentation that is returned.  ``element_names`` maps each
    label of ``X`` to its element.
    """
    bad = em_violations(alg)
    if bad:
        raise EmError(f"tables fail the algebra laws: {bad[0]}")
    X = list(alg.X)
    index = {x: k for k, x in enumerate(X)}
    rels = []

    def e(*terms):
        v = [0] * len(X)
        for x, c in terms:
            v[index[x]] += c
        return v

    rels.append(e((alg.zero1, 1)))
    for a, b in itertools.combinations_with_replacement(X, 2):
        rels.append(e((a, 1), (b, 1), (alg.add1[a, b], -1)))
    big = GroupPresentation(len(X), rels)
    if big.free_rank:
        raise EmError("tables do not present a finite group")
    factors = big.invariant_factors
    P = GroupPresentation(len(factors), [[d if r == k else 0 for r in range(len(factors))]
                                         for k, d in enumerate(factors)])
    names = {x: P.from_canonical_element(big.to_canonical(e((x, 1)))) for x in X}
    gens = [names[alg.carrier.i[xp]] for xp in alg.X_prime]
    return QoGroup(P, Cone(P, gens), labels=list(alg.X_prime), element_names=names)


def element_label(g: GroupElement) -> str:
    """Canonical label of an element: its canonical coordinates."""
    return "[" + ",".join(str(c) for c in g.canonical) + "]"


def cone_elements(Q: QoGroup) -> list[GroupElement]:
    """The positive cone of a finite qo-group, in canonical order."""
    seen = {Q.group.zero()}
    frontier = list(seen)
    while frontier:
        nxt = []
        for g in frontier:
            for s in Q.cone.generators:
                h = g + s
                if h not in seen:
                    seen.add(h)
                    nxt.append(h)
        frontier = nxt
    return sorted(seen, key=lambda g: g.canonical)


def qab_to_em(Q: QoGroup) -> EmAlgebra:
    """Tabulate a finite qo-group as an algebra; labels are canonical coordinates."""
    if not Q.group.is_finite:
        raise EmError("only finite groups can be tabulated")
    G = [g.reduced() for g in Q.group.elements()]
    M = cone_elements(Q)
    lab = element_label
    carrier = SetmObject([lab(m) for m in M], [lab(g) for g in G], {lab(m): lab(m) for m in M})
    add1 = {(lab(a), lab(b)): lab(a + b) for a in G for b in G}
    neg = {lab(a): lab(-a) for a in G}
    add2 = {(lab(a), lab(b)): lab(a + b) for a in M for b in M}
    z = lab(Q.group.zero())
    return EmAlgebra(carrier, add1, neg, z, add2, z)


def roundtrip_qab(Q: QoGroup) -> dict:
    """``em_to_qab(qab_to_em(Q))`` against ``Q`` through the recorded relabeling."""
    alg = qab_to_em(Q)
    R = em_to_qab(alg)
    phi = {element_label(g): R.element_names[element_label(g)] for g in Q.group.elements()}
    elems = list(Q.group.elements())
    ok = (Q.group.canonical_form() == R.group.canonical_form()
          and len(set(phi.values())) == len(phi) == (R.group.order() or 0))
    if ok:
        for a, b in itertools.product(elems, repeat=2):
            if phi[element_label(a + b)] != phi[element_label(a)] + phi[element_label(b)]:
                ok = False
                break
    if ok:
        image = {phi[element_label(m)] for m in cone_elements(Q)}
        ok = image == set(cone_elements(R))
    return {
        "identity": ok,
        "relabeling": {k: list(v.canonical) for k, v in sorted(phi.items())},
    }


def roundtrip_em(alg: EmAlgebra) -> dict:
    """``qab_to_em(em_to_qab(alg))`` against ``alg`` through the recorded relabeling."""
    Q = em_to_qab(alg)
    back = qab_to_em(Q)
    psi = {x: element_label(Q.element_names[x]) for x in alg.X}
    i, j = alg.carrier.i, back.carrier.i
    ok = sorted(psi.values()) == sorted(back.X) and len(set(psi.values())) == len(psi)
    ok = ok and sorted(psi[i[x]] for x in alg.X_prime) == sorted(j[y] for y in back.X_prime)
    if ok:
        ok = psi[alg.zero1] == back.zero1 and psi[i[alg.zero2]] == j[back.zero2]
        ok = ok and all(psi[alg.add1[a, b]] == back.add1[psi[a], psi[b]]
                        for a, b in itertools.product(alg.X, repeat=2))
        ok = ok and all(psi[alg.neg[a]] == back.neg[psi[a]] for a in alg.X)
        ok = ok and all(psi[i[alg.add2[a, b]]] == back.add2[psi[i[a]], psi[i[b]]]
                        for a, b in itertools.product(alg.X_prime, repeat=2))
    return {"identity": ok, "relabeling": dict(sorted(psi.items()))}


def z2_full_cone_algebra() -> EmAlgebra:
    """Two-element algebra with ``x`` as zero and ``y + y = x``, and ``X' = X``.

    Its qo-group is Z/2 ordered by the whole group, which is not a po-group.
    """
    carrier = SetmObject(["x", "y"], ["x", "y"], {"x": "x", "y": "y"})
    add = {("x", "x"): "x", ("x", "y"): "y", ("y", "x"): "y", ("y", "y"): "x"}
    return EmAlgebra(carrier, add, {"x": "x", "y": "y"}, "x", dict(add), "x")


def cyclic_algebra(n: int, X_prime: Optional[list[int]] = None) -> EmAlgebra:
    """Tables of Z/n on labels ``"0".."n-1"`` with ``X'`` the given residues (default ``{0}``)."""
    X = [str(k) for k in range(n)]
    Xp = [str(k) for k in (X_prime if X_prime is not None else [0])]
    add = {(str(a), str(b)): str((a + b) % n) for a in range(n) for b in range(n)}
    add2 = {(a, b): add[a, b] for a in Xp for b in Xp}
    neg = {str(a): str(-a % n) for a in range(n)}
    return EmAlgebra(SetmObject(Xp, X, {x: x for x in Xp}), add, neg, "0", add2, "0")
