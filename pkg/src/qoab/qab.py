"""Quasi-ordered abelian groups and order-preserving homomorphisms.

A :class:`QoGroup` is a presented group together with the cone it orders
by: ``a <= b`` iff ``b - a`` lies in the cone.  The cone is stored as the
image of the positive monoid inside the group, since the same abstract
monoid can sit inside a group in inequivalent ways (the doubling map
``N -> Z`` gives a different order than the inclusion).
"""

from __future__ import annotations

import random
from functools import cached_property
from typing import Mapping, Optional, Sequence

from .cone import (Cone, MembershipCertificate, is_conical, unit_generators,
                   units_subgroup)
from .fgab import (GroupElement, GroupHom, GroupPresentation, PresentationMismatch,
                   free_group, hom_compose, identity_hom, in_subgroup,
                   quotient_by_subgroup)


class QoGroup:
    """A group with the quasi-order induced by ``cone``.

    ``labels`` optionally names the cone generators (aligned with
    ``cone.generators``), ``basis_labels`` the ambient generators of the
    group, and ``element_names`` maps carrier labels to elements when the
    object was built from operation tables.
    """

    def __init__(self, group: GroupPresentation, cone: Cone,
                 labels: Optional[Sequence[str]] = None,
                 basis_labels: Optional[Sequence[str]] = None,
                 element_names: Optional[Mapping[str, GroupElement]] = None):
        if cone.presentation.token != group.token:
            raise PresentationMismatch("cone lives in a different presentation")
        if labels is not None and len(labels) != len(cone.generators):
            raise ValueError("one label per cone generator expected")
        if basis_labels is not None and len(basis_labels) != group.ambient_rank:
            raise ValueError("one basis label per ambient generator expected")
        self.group = group
        self.cone = cone
        self.labels = tuple(labels) if labels is not None else None
        self.basis_labels = tuple(basis_labels) if basis_labels is not None else None
        self.element_names = dict(element_names) if element_names is not None else None

    def element(self, coords: Sequence[int]) -> GroupElement:
        return self.group.element(coords)

    def leq(self, a: GroupElement, b: GroupElement) -> bool:
        return leq(self, a, b)

    @cached_property
    def antisymmetrization(self) -> tuple["QoGroup", "QoMorphism"]:
        units = units_subgroup(self.cone)
        P, proj = quotient_by_subgroup(self.group, units)
        cone = Cone(P, [proj(g) for g in self.cone.generators])
        Q = QoGroup(P, cone, basis_labels=self.basis_labels)
        return Q, QoMorphism(proj, self, Q, _certificates(proj, self, Q))

    def __repr__(self) -> str:
        return f"QoGroup({self.group.describe()}, cone={self.cone!r})"


class QoMorphism:
    """A group homomorphism carrying the source cone into the target cone.

    ``cone_certificates`` holds one member certificate per source cone
    generator, witnessing that its image lies in the target cone.
    """

    def __init__(self, hom: GroupHom, source: QoGroup, target: QoGroup,
                 cone_certificates: Sequence[MembershipCertificate]):
        if hom.source.token != source.group.token or hom.target.token != target.group.token:
            raise PresentationMismatch("hom does not match the qo-groups")
        certs = tuple(cone_certificates)
        if len(certs) != len(source.cone.generators) or not all(c.is_member for c in certs):
            raise ValueError("every source cone generator needs a member certificate")
        self.hom = hom
        self.source = source
        self.target = target
        self.cone_certificates = certs

    def __call__(self, a: GroupElement) -> GroupElement:
        return self.hom(a)

    def verify(self) -> bool:
        return all(c.element == self.hom(g) and c.verify(self.target.cone)
                   for c, g in zip(self.cone_certificates, self.source.cone.generators))


def _certificates(hom: GroupHom, source: QoGroup, target: QoGroup
                  ) -> Optional[list[MembershipCertificate]]:
    certs = []
    for g in source.cone.generators:
        c = target.cone.contains(hom(g))
        if not c.is_member:
            return None
        certs.append(c)
    return certs


def leq(Q: QoGroup, a: GroupElement, b: GroupElement) -> bool:
    """``a <= b``: whether ``b - a`` lies in the cone."""
    for x in (a, b):
        if x.presentation.token != Q.group.token:
            raise PresentationMismatch("element outside the qo-group")
    return (b - a) in Q.cone


def leq_certificate(Q: QoGroup, a: GroupElement, b: GroupElement) -> MembershipCertificate:
    for x in (a, b):
        if x.presentation.token != Q.group.token:
            raise PresentationMismatch("element outside the qo-group")
    return Q.cone.contains(b - a)


def order_equivalent(Q: QoGroup, a: GroupElement, b: GroupElement) -> bool:
    return leq(Q, a, b) and leq(Q, b, a)


def in_units(Q: QoGroup, g: GroupElement) -> bool:
    """Membership of ``g`` in the unit group of the cone (a subgroup test)."""
    return in_subgroup(g, units_subgroup(Q.cone))


def is_po(Q: QoGroup) -> bool:
    return is_conical(Q.cone)


def is_trivially_ordered(Q: QoGroup) -> bool:
    return all(g.is_zero() for g in Q.cone.generators)


def antisymmetrize(Q: QoGroup) -> tuple[QoGroup, QoMorphism]:
    """Quotient by the units of the cone, with the projection morphism."""
    return Q.antisymmetrization


def morphism_is_order_preserving(hom: GroupHom, source: QoGroup, target: QoGroup
                                 ) -> Optional[QoMorphism]:
    certs = _certificates(hom, source, target)
    if certs is None:
        return None
    return QoMorphism(hom, source, target, certs)


def identity_morphism(Q: QoGroup) -> QoMorphism:
    return morphism_is_order_preserving(identity_hom(Q.group), Q, Q)


def compose(f: QoMorphism, g: QoMorphism) -> QoMorphism:
    """``f . g`` as qo-morphisms."""
    if g.target is not f.source:
        raise PresentationMismatch("cannot compose: target of g is not the source of f")
    h = hom_compose(f.hom, g.hom)
    return QoMorphism(h, g.source, f.target, _certificates(h, g.source, f.target))


def antisym_on_morphism(f: QoMorphism) -> QoMorphism:
    """The induced map ``G/G* -> H/H*``, ``g + G* -> f(g) + H*``."""
    src, p_src = antisymmetrize(f.source)
    tgt, p_tgt = antisymmetrize(f.target)
    images = [p_tgt(f.hom(e)) for e in f.source.group.generators()]
    # the quotient keeps the ambient generators of the source, so these images
    # define the induced map; well-definedness is checked by GroupHom
    hom = GroupHom(src.group, tgt.group, images)
    out = morphism_is_order_preserving(hom, src, tgt)
    if out is None:
        raise ArithmeticError("induced map on antisymmetrizations is not order preserving")
    return out


def trivial_free_qogroup(X: Sequence[str]) -> QoGroup:
    """Free abelian group on ``X`` with the discrete order."""
    X = list(X)
    if len(set(X)) != len(X):
        raise ValueError("labels must be distinct")
    P = free_group(len(X))
    return QoGroup(P, Cone(P), basis_labels=X)


def sample_elements(Q: QoGroup, rng: random.Random, n: int, box: int = 3) -> list[GroupElement]:
    """All elements of a finite group with at most ``n`` elements, else ``n`` samples."""
    order = Q.group.order()
    if order is not None and order <= n:
        return list(Q.group.elements())
    r = Q.group.ambient_rank
    return [Q.group.element([rng.randint(-box, box) for _ in range(r)]) for _ in range(n)]


def check_antisym_triangles(Q: QoGroup, rng: Optional[random.Random] = None,
                            n_samples: int = 64) -> list[dict]:
    """Triangle identities for antisymmetrization left adjoint to the inclusion.

    The unit at ``Q`` is the projection ``Q -> Q/Q*``; the counit at a
    po-group ``P`` is the identity-on-generators map ``P/P* -> P``.  Returns
    the violations found (empty when both composites are identities).
    """
    rng = rng or random.Random(0)
    out = []
    A, eta = antisymmetrize(Q)
    # (eps A) . (A eta) = id on A Q
    AA, _ = antisymmetrize(A)
    a_eta = antisym_on_morphism(eta)  # A Q -> A U A Q = AA
    eps_A = GroupHom(AA.group, A.group, A.group.generators())
    for x in sample_elements(A, rng, n_samples):
        y = eps_A(a_eta(x))
        if y != x:
            out.append({"law": "eps_A . A_eta", "element": list(x.coords), "image": list(y.coords)})
    # (U eps) . (eta U) = id on a po-group P; take P = A Q
    eta_P = antisymmetrize(A)[1]
    for x in sample_elements(A, rng, n_samples):
        y = eps_A(eta_P(x))
        if y != x:
            out.append({"law": "U_eps . eta_U", "element": list(x.coords), "image": list(y.coords)})
    return out


__all__ = [
    "QoGroup", "QoMorphism", "leq", "leq_certificate", "order_equivalent", "in_units",
    "is_po", "is_trivially_ordered", "antisymmetrize", "antisym_on_morphism",
    "morphism_is_order_preserving", "identity_morphism", "compose",
    "trivial_free_qogroup", "check_antisym_triangles", "sample_elements",
    "unit_generators",
]
