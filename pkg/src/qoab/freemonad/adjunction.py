"""The free functor ``F`` on injective set maps, its unit and counit, and the
monad ``T = UF`` with pointwise law checks.

``F(i: X' -> X)`` is the free abelian group on ``X`` ordered by the cone of
the basis vectors ``i(x')``.  Elements of ``T(i)`` are words: :class:`Word`
over ``X`` for the group part, :class:`PosWord` over ``X'`` for the monoid
part.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Callable, Hashable, Optional

from ..cone import Cone
from ..fgab import GroupElement, GroupHom, free_group
from ..qab import QoGroup, QoMorphism, morphism_is_order_preserving, sample_elements
from .setm import SetmMorphism, SetmObject
from .words import PosWord, Word, eta, mu, random_nested, random_word


def free_object(i: SetmObject) -> QoGroup:
    """``F(i)``: Z^X with the cone generated by the basis vectors of ``i(X')``."""
    P = free_group(len(i.X))
    index = {x: k for k, x in enumerate(i.X)}
    gens = [P.basis(index[i.i[xp]]) for xp in i.X_prime]
    return QoGroup(P, Cone(P, gens), labels=list(i.X_prime), basis_labels=list(i.X))


def word_to_element(Q: QoGroup, w: Word) -> GroupElement:
    """Read a word over the basis labels of ``Q`` as a group element."""
    index = {x: k for k, x in enumerate(Q.basis_labels)}
    coords = [0] * Q.group.ambient_rank
    for x, c in w.items:
        coords[index[x]] += c
    return Q.group.element(coords)


def element_to_word(Q: QoGroup, g: GroupElement, cls=Word) -> Word:
    return cls(zip(Q.basis_labels, g.coords))


def free_on_morphism(f: SetmMorphism) -> QoMorphism:
    """``F(f)``: the group map sending ``basis(x)`` to ``basis(f1(x))``."""
    src, tgt = f.source.free, f.target.free
    index = {y: k for k, y in enumerate(f.target.X)}
    images = [tgt.group.basis(index[f.f1[x]]) for x in f.source.X]
    out = morphism_is_order_preserving(GroupHom(src.group, tgt.group, images), src, tgt)
    if out is None:
        raise ArithmeticError("F(f) failed to preserve the cone")
    return out


def unit_component(i: SetmObject) -> tuple[dict, dict]:
    """``eta_i``: each label goes to its singleton word, on ``X`` and on ``X'``."""
    return ({x: eta(x) for x in i.X}, {x: eta(x, PosWord) for x in i.X_prime})


def counit_component(Q: QoGroup) -> Callable[[Word], GroupElement]:
    """``eps_Q``: evaluate a formal word of elements of ``Q`` inside ``Q``."""
    zero = Q.group.zero()

    def evaluate(w: Word) -> GroupElement:
        acc = zero
        for g, c in w.items:
            acc = acc + c * g
        return acc

    return evaluate


def monad_mu(w: Word) -> Word:
    return mu(w)


def T_of_i(i: SetmObject, w: PosWord) -> Word:
    """The object ``T(i)`` as a map: a monoid word over ``X'`` read in ``X``."""
    return Word((i.i[x], c) for x, c in w.items)


def expand_fully(w: Word, depth: int) -> dict:
    """Coefficient of each base label in a ``depth``-nested word.

    Recursive expansion that never calls ``mu``; the associativity check
    compares both sides of the law against it.
    """
    out: dict = {}
    if depth <= 1:
        for k, c in w.items:
            out[k] = out.get(k, 0) + c
        return out
    for inner, c in w.items:
        for k, d in expand_fully(inner, depth - 1).items():
            out[k] = out.get(k, 0) + c * d
    return {k: v for k, v in out.items() if v}


@dataclass
class LawReport:
    """Outcome of a pointwise law check, with witnesses for every violation."""

    name: str
    seed: int
    checks: dict = field(default_factory=dict)
    violations: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.violations

    def record(self, law: str, ok: bool, witness=None, lhs=None, rhs=None) -> None:
        self.checks[law] = self.checks.get(law, 0) + 1
        if not ok:
            self.violations.append({"law": law, "witness": witness, "lhs": lhs, "rhs": rhs})

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "seed": self.seed,
            "passed": self.passed,
            "checks": dict(sorted(self.checks.items())),
            "violations": self.violations,
        }


def _js(w):
    return w.to_json() if isinstance(w, Word) else w


def check_monad_laws(i: SetmObject, seed: int = 0, n_samples: int = 256) -> LawReport:
    """Unit and associativity laws of ``T`` at ``i``, on both components.

    Also checks that ``eta_i`` and ``mu_i`` are morphisms of injective set
    maps, i.e. commute with ``T(i)``.
    """
    rng = random.Random(seed)
    report = LawReport("monad_laws", seed)
    parts = [("X", list(i.X), Word, -3), ("X'", list(i.X_prime), PosWord, 0)]
    for _ in range(n_samples):
        for tag, labels, cls, lo in parts:
            w = random_word(rng, labels, lo, 3, cls)
            # mu . T eta = id
            lhs = mu(w.map_keys(lambda x: eta(x, cls)))
            report.record(f"left_unit[{tag}]", lhs == w, _js(w), _js(lhs), _js(w))
            # mu . eta T = id
            lhs = mu(cls.unit(w))
            report.record(f"right_unit[{tag}]", lhs == w, _js(w), _js(lhs), _js(w))
            # mu . T mu = mu . mu T on a triply nested word
            W = random_nested(rng, labels, 3, lo, 3, cls)
            a = mu(W.map_keys(mu))
            b = mu(mu(W))
            oracle = cls(expand_fully(W, 3))
            report.record(f"associativity[{tag}]", a == b == oracle, _js(W), _js(a), _js(b))
        # naturality in i: T(i) . mu = mu . T^2(i) on monoid words
        W2 = random_nested(rng, list(i.X_prime), 2, 0, 3, PosWord)
        lhs = T_of_i(i, mu(W2))
        rhs = mu(Word((T_of_i(i, inner), c) for inner, c in W2.items))
        report.record("mu_square", lhs == rhs, _js(W2), _js(lhs), _js(rhs))
    for xp in i.X_prime:
        lhs = T_of_i(i, eta(xp, PosWord))
        rhs = eta(i.i[xp])
        report.record("eta_square", lhs == rhs, xp, _js(lhs), _js(rhs))
    return report


def check_triangle_identities(i: SetmObject, Q: Optional[QoGroup] = None, seed: int = 0,
                              n_samples: int = 256) -> LawReport:
    """Both triangle identities of ``F -| U``, pointwise.

    ``(eps F) . (F eta) = id`` is checked at ``F(i)`` on sampled words by
    passing through actual group elements of ``F(i)``.  ``(U eps) . (eta U)
    = id`` is checked at ``Q`` (default ``F(i)``) on all elements when ``Q``
    is small and finite, otherwise on samples, and on sampled cone elements.
    """
    rng = random.Random(seed)
    report = LawReport("triangle_identities", seed)
    Fi = i.free
    eps_F = counit_component(Fi)
    for _ in range(n_samples):
        w = random_word(rng, list(i.X), -3, 3)
        Fw = w.map_keys(eta)  # F eta: a word whose letters are singleton words
        lifted = Word((word_to_element(Fi, k), c) for k, c in Fw.items)
        back = element_to_word(Fi, eps_F(lifted))
        report.record("epsF.Feta[X]", back == w, _js(w), _js(back), _js(w))
        pw = random_word(rng, list(i.X_prime), 0, 3, PosWord)
        Fpw = pw.map_keys(lambda x: eta(x, PosWord))
        lifted = Word((word_to_element(Fi, T_of_i(i, k)), c) for k, c in Fpw.items)
        total = element_to_word(Fi, eps_F(lifted))
        back = PosWord((xp, total.coeff(i.i[xp])) for xp in i.X_prime)
        ok = back == pw and total == T_of_i(i, back)
        report.record("epsF.Feta[X']", ok, _js(pw), _js(back), _js(pw))

    Q = Q if Q is not None else Fi
    eps_Q = counit_component(Q)
    for g in sample_elements(Q, rng, n_samples):
        back = eps_Q(eta(g))
        report.record("Ueps.etaU[G]", back == g, list(g.coords), list(back.coords), list(g.coords))
    gens = Q.cone.generators
    for _ in range(n_samples if gens else 0):
        m = Q.group.zero()
        for s in gens:
            m = m + rng.randint(0, 3) * s
        back = eps_Q(eta(m))
        report.record("Ueps.etaU[M]", back == m, list(m.coords), list(back.coords), list(m.coords))
    return report
