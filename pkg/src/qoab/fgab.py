"""Finitely generated abelian groups given as Z^n modulo a relation lattice.

A :class:`GroupPresentation` is canonicalized once, at construction, via the
Smith Normal Form of its relation matrix.  Elements carry ambient integer
coordinates; equality compares canonical coordinates, which put torsion
entries into ``[0, d)`` and keep free entries as they are.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Iterator, Optional, Sequence

from .exactlin import (DimensionError, IntMatrix, smith_normal_form,
                       solve_integer_linear, unimodular_inverse)

_tokens = itertools.count(1)


class PresentationMismatch(ValueError):
    """Raised when elements or maps from different presentations are combined."""


class IllDefinedHom(ValueError):
    """A relation of the source does not map to zero in the target."""

    def __init__(self, relation_index: int, image: "GroupElement"):
        super().__init__(f"relation {relation_index} maps to {list(image.coords)}, not zero")
        self.relation_index = relation_index
        self.image = image


class GroupPresentation:
    """The group ``Z^ambient_rank / span(relations)``.

    ``relations`` is a sequence of integer vectors of length ``ambient_rank``
    (the columns of the relation matrix).  Each presentation gets its own
    token; elements and maps are only combined within one token.
    """

    def __init__(self, ambient_rank: int, relations: Sequence[Sequence[int]] = ()):
        if ambient_rank < 0:
            raise ValueError("ambient rank must be nonnegative")
        self.ambient_rank = ambient_rank
        self.relations = tuple(tuple(int(x) for x in r) for r in relations)
        self.relation_matrix = IntMatrix.from_columns(self.relations, ambient_rank)
        self.token = next(_tokens)

        snf = smith_normal_form(self.relation_matrix)
        diag = snf.diagonal
        self._U = snf.U
        self._Uinv = unimodular_inverse(snf.U)
        factors = []
        torsion_rows = []
        free_rows = []
        for i in range(ambient_rank):
            d = diag[i] if i < len(diag) else 0
            if d == 0:
                free_rows.append(i)
            elif d > 1:
                torsion_rows.append(i)
                factors.append(d)
        self.invariant_factors = tuple(factors)
        self.free_rank = len(free_rows)
        self._torsion_rows = tuple(torsion_rows)
        self._free_rows = tuple(free_rows)

    def canonical_form(self) -> tuple[int, tuple[int, ...]]:
        return self.free_rank, self.invariant_factors

    @property
    def is_finite(self) -> bool:
        return self.free_rank == 0

    def order(self) -> Optional[int]:
        """Number of elements, ``None`` for infinite groups."""
        if self.free_rank:
            return None
        out = 1
        for d in self.invariant_factors:
            out *= d
        return out

    # coordinate maps between ambient and canonical coordinates
    def to_canonical(self, coords: Sequence[int]) -> tuple[int, ...]:
        y = self._U.apply(coords)
        torsion = tuple(y[i] % d for i, d in zip(self._torsion_rows, self.invariant_factors))
        return torsion + tuple(y[i] for i in self._free_rows)

    def from_canonical(self, canon: Sequence[int]) -> tuple[int, ...]:
        k = len(self.invariant_factors)
        if len(canon) != k + self.free_rank:
            raise DimensionError("canonical vector has the wrong length")
        y = [0] * self.ambient_rank
        for i, v in zip(self._torsion_rows, canon[:k]):
            y[i] = v
        for i, v in zip(self._free_rows, canon[k:]):
            y[i] = v
        return tuple(self._Uinv.apply(y))

    def element(self, coords: Iterable[int]) -> "GroupElement":
        coords = tuple(int(x) for x in coords)
        if len(coords) != self.ambient_rank:
            raise PresentationMismatch(
                f"element of length {len(coords)} in a rank-{self.ambient_rank} presentation")
        return GroupElement(self, coords)

    def from_canonical_element(self, canon: Sequence[int]) -> "GroupElement":
        return GroupElement(self, self.from_canonical(canon))

    def zero(self) -> "GroupElement":
        return GroupElement(self, (0,) * self.ambient_rank)

    def basis(self, i: int) -> "GroupElement":
        return GroupElement(self, tuple(int(j == i) for j in range(self.ambient_rank)))

    def generators(self) -> list["GroupElement"]:
        return [self.basis(i) for i in range(self.ambient_rank)]

    def elements(self) -> Iterator["GroupElement"]:
        """All elements of a finite group, in canonical-coordinate order."""
        if self.free_rank:
            raise ValueError("cannot enumerate an infinite group")
        for canon in itertools.product(*(range(d) for d in self.invariant_factors)):
            yield self.from_canonical_element(canon)

    def __repr__(self) -> str:
        return (f"GroupPresentation(ambient_rank={self.ambient_rank}, "
                f"relations={[list(r) for r in self.relations]})")

    def describe(self) -> str:
        parts = [f"Z/{d}" for d in self.invariant_factors] + ["Z"] * self.free_rank
        return " + ".join(parts) if parts else "0"


def free_group(n: int) -> GroupPresentation:
    return GroupPresentation(n)


def cyclic_group(n: int) -> GroupPresentation:
    return GroupPresentation(1, [(n,)])


def canonical_form(P: GroupPresentation) -> tuple[int, tuple[int, ...]]:
    """Free rank and invariant factors ``d_1 | d_2 | ...`` (each at least 2)."""
    return P.canonical_form()


def is_torsion_free(P: GroupPresentation) -> bool:
    return not P.invariant_factors


@dataclass(frozen=True, eq=False)
class GroupElement:
    presentation: GroupPresentation
    coords: tuple[int, ...]

    @cached_property
    def canonical(self) -> tuple[int, ...]:
        return self.presentation.to_canonical(self.coords)

    def _check(self, other: "GroupElement") -> None:
        if not isinstance(other, GroupElement):
            raise TypeError(f"expected a group element, got {type(other).__name__}")
        if other.presentation.token != self.presentation.token:
            raise PresentationMismatch("elements belong to different presentations")

    def __add__(self, other: "GroupElement") -> "GroupElement":
        self._check(other)
        return GroupElement(self.presentation, tuple(a + b for a, b in zip(self.coords, other.coords)))

    def __neg__(self) -> "GroupElement":
        return GroupElement(self.presentation, tuple(-a for a in self.coords))

    def __sub__(self, other: "GroupElement") -> "GroupElement":
        return self + (-other)

    def __rmul__(self, k: int) -> "GroupElement":
        return GroupElement(self.presentation, tuple(k * a for a in self.coords))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, GroupElement):
            return NotImplemented
        return (self.presentation.token == other.presentation.token
                and self.canonical == other.canonical)

    def __hash__(self) -> int:
        return hash((self.presentation.token, self.canonical))

    def is_zero(self) -> bool:
        return not any(self.canonical)

    def reduced(self) -> "GroupElement":
        """The canonical representative, in ambient coordinates."""
        return self.presentation.from_canonical_element(self.canonical)

    def sort_key(self) -> tuple[int, ...]:
        return self.canonical

    def __repr__(self) -> str:
        return f"GroupElement({list(self.coords)})"


def elem_add(a: GroupElement, b: GroupElement) -> GroupElement:
    return a + b


def elem_neg(a: GroupElement) -> GroupElement:
    return -a


def elem_zero(P: GroupPresentation) -> GroupElement:
    return P.zero()


def elem_eq(a: GroupElement, b: GroupElement) -> bool:
    """Equality decided by solving for a relation combination.

    Independent of canonical coordinates: ``a == b`` iff ``a - b`` lies in
    the integer span of the relation columns.
    """
    a._check(b)
    diff = [x - y for x, y in zip(a.coords, b.coords)]
    if not any(diff):
        return True
    return solve_integer_linear(a.presentation.relation_matrix, diff) is not None


class GroupHom:
    """Homomorphism given by the images of the ambient generators of the source."""

    def __init__(self, source: GroupPresentation, target: GroupPresentation,
                 images: Sequence[GroupElement], check: bool = True):
        images = tuple(images)
        if len(images) != source.ambient_rank:
            raise DimensionError(
                f"{len(images)} images for {source.ambient_rank} generators")
        for g in images:
            if g.presentation.token != target.token:
                raise PresentationMismatch("generator image outside the target")
        self.source = source
        self.target = target
        self.images = images
        if check:
            bad = self.violated_relation()
            if bad is not None:
                raise IllDefinedHom(bad, self._image_of(source.relations[bad]))

    @classmethod
    def from_matrix(cls, source: GroupPresentation, target: GroupPresentation,
                    rows: Sequence[Sequence[int]], check: bool = True) -> "GroupHom":
        """Hom whose matrix (target ambient x source ambient) is ``rows``."""
        M = IntMatrix.from_rows(rows, source.ambient_rank) if rows else IntMatrix.zeros(
            target.ambient_rank, source.ambient_rank)
        return cls(source, target, [target.element(M.column(j)) for j in range(M.cols)], check)

    def _image_of(self, coords: Sequence[int]) -> GroupElement:
        out = [0] * self.target.ambient_rank
        for c, g in zip(coords, self.images):
            if c:
                for k, x in enumerate(g.coords):
                    out[k] += c * x
        return GroupElement(self.target, tuple(out))

    def violated_relation(self) -> Optional[int]:
        for k, rel in enumerate(self.source.relations):
            if not self._image_of(rel).is_zero():
                return k
        return None

    def __call__(self, a: GroupElement) -> GroupElement:
        if a.presentation.token != self.source.token:
            raise PresentationMismatch("argument outside the source presentation")
        return self._image_of(a.coords)

    def matrix(self) -> IntMatrix:
        return IntMatrix.from_columns([g.coords for g in self.images], self.target.ambient_rank)

    def __repr__(self) -> str:
        return f"GroupHom({[list(g.coords) for g in self.images]})"


def identity_hom(P: GroupPresentation) -> GroupHom:
    return GroupHom(P, P, P.generators(), check=False)


def zero_hom(P: GroupPresentation, Q: GroupPresentation) -> GroupHom:
    return GroupHom(P, Q, [Q.zero()] * P.ambient_rank, check=False)


def hom_well_defined(f: GroupHom) -> bool:
    return f.violated_relation() is None


def hom_apply(f: GroupHom, a: GroupElement) -> GroupElement:
    return f(a)


def hom_compose(f: GroupHom, g: GroupHom) -> GroupHom:
    """``f . g``: apply ``g`` first, then ``f``."""
    if g.target.token != f.source.token:
        raise PresentationMismatch("cannot compose: target of g is not the source of f")
    return GroupHom(g.source, f.target, [f(x) for x in g.images], check=False)


def quotient_by_subgroup(P: GroupPresentation, gens: Sequence[GroupElement]
                         ) -> tuple[GroupPresentation, GroupHom]:
    """``P / <gens>`` together with the canonical projection."""
    for g in gens:
        if g.presentation.token != P.token:
            raise PresentationMismatch("subgroup generator outside the presentation")
    Q = GroupPresentation(P.ambient_rank, P.relations + tuple(g.coords for g in gens))
    proj = GroupHom(P, Q, Q.generators())
    return Q, proj


def in_subgroup(g: GroupElement, gens: Sequence[GroupElement]) -> bool:
    """Whether ``g`` lies in the subgroup generated by ``gens``."""
    P = g.presentation
    cols = [x.coords for x in gens] + list(P.relations)
    M = IntMatrix.from_columns(cols, P.ambient_rank)
    return solve_integer_linear(M, list(g.coords)) is not None
