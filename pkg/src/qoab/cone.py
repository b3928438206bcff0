"""Finitely generated submonoids (positive cones) of a presented group."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

from .exactlin import IntMatrix, nonneg_integer_feasible, rank, solve_integer_linear
from .fgab import GroupElement, GroupPresentation, PresentationMismatch

MEMBER = "member"
NON_MEMBER = "non_member"


@dataclass(frozen=True)
class MembershipCertificate:
    """Outcome of a membership query.

    For members, ``sum(coefficients[j] * generators[j]) +
    sum(lattice_witness[k] * relations[k])`` equals ``element`` exactly in
    ambient coordinates.
    """

    element: GroupElement
    status: str
    coefficients: Optional[tuple[int, ...]] = None
    lattice_witness: Optional[tuple[int, ...]] = None

    @property
    def is_member(self) -> bool:
        return self.status == MEMBER

    def verify(self, cone: "Cone") -> bool:
        """Re-check a member certificate against ``cone`` by substitution."""
        if not self.is_member:
            return False
        P = cone.presentation
        if (self.coefficients is None or len(self.coefficients) != len(cone.generators)
                or any(c < 0 for c in self.coefficients)):
            return False
        if self.lattice_witness is None or len(self.lattice_witness) != len(P.relations):
            return False
        total = [0] * P.ambient_rank
        for c, g in zip(self.coefficients, cone.generators):
            for k, x in enumerate(g.coords):
                total[k] += c * x
        for w, r in zip(self.lattice_witness, P.relations):
            for k, x in enumerate(r):
                total[k] += w * x
        return tuple(total) == self.element.coords

    def to_dict(self) -> dict:
        out = {"element": list(self.element.coords), "status": self.status}
        if self.is_member:
            out["coefficients"] = list(self.coefficients)
            out["lattice_witness"] = list(self.lattice_witness)
        return out


class Cone:
    """The submonoid of ``presentation`` generated by ``generators``.

    Generators are deduplicated by canonical coordinates, keeping the first
    occurrence in input order, so certificates line up with the caller's
    list.  The empty cone is allowed and stands for the trivial order.
    """

    def __init__(self, presentation: GroupPresentation, generators: Iterable[GroupElement] = ()):
        seen = {}
        for g in generators:
            if g.presentation.token != presentation.token:
                raise PresentationMismatch("cone generator outside the presentation")
            seen.setdefault(g.canonical, g)
        self.presentation = presentation
        self.generators = tuple(seen.values())
        self._cache: dict = {}

    @classmethod
    def from_coords(cls, presentation: GroupPresentation, coords: Iterable[Sequence[int]]) -> "Cone":
        return cls(presentation, [presentation.element(c) for c in coords])

    def _system(self, g: GroupElement) -> tuple[IntMatrix, list[int], int]:
        # rows: canonical coordinates; columns: generators, then one
        # nonnegative multiple of d per torsion coordinate
        P = self.presentation
        k = len(P.invariant_factors)
        n_rows = k + P.free_rank
        cols = [s.canonical for s in self.generators]
        for i, d in enumerate(P.invariant_factors):
            cols.append(tuple(-d if r == i else 0 for r in range(n_rows)))
        return IntMatrix.from_columns(cols, n_rows), list(g.canonical), len(self.generators)

    def contains(self, g: GroupElement, bound: Optional[int] = None,
                 lexmin: bool = True) -> MembershipCertificate:
        if g.presentation.token != self.presentation.token:
            raise PresentationMismatch("element outside the cone's presentation")
        # cache the generator coefficients only: the lattice witness depends on
        # the ambient representative of g, not just on its class
        key = (g.canonical, bound, lexmin)
        if key not in self._cache:
            A, rhs, m = self._system(g)
            caps = [bound] * m + [None] * (A.cols - m)
            res = nonneg_integer_feasible(A, rhs, caps, lexmin=lexmin)
            self._cache[key] = tuple(res.witness[:m]) if res.feasible else None
        coeffs = self._cache[key]
        if coeffs is None:
            return MembershipCertificate(g, NON_MEMBER)
        P = self.presentation
        rest = list(g.coords)
        for c, s in zip(coeffs, self.generators):
            for i, x in enumerate(s.coords):
                rest[i] -= c * x
        lattice = solve_integer_linear(P.relation_matrix, rest) if P.relations else []
        if lattice is None:
            raise ArithmeticError("membership witness does not lift to the presentation")
        return MembershipCertificate(g, MEMBER, coeffs, tuple(lattice))

    def __contains__(self, g: GroupElement) -> bool:
        return self.contains(g, lexmin=False).is_member

    def __len__(self) -> int:
        return len(self.generators)

    def __repr__(self) -> str:
        return f"Cone({[list(g.coords) for g in self.generators]})"


def contains(C: Cone, g: GroupElement, bound: Optional[int] = None) -> MembershipCertificate:
    return C.contains(g, bound)


def unit_generators(C: Cone) -> list[GroupElement]:
    """Generators ``s`` with ``-s`` also in the cone."""
    return [s for s in C.generators if (-s) in C]


def units_subgroup(C: Cone) -> list[GroupElement]:
    """Generators of the unit group of the cone.

    If ``sum a_i s_i + sum b_i s_i = 0`` then every ``s_i`` with a positive
    coefficient is a unit, so the units are exactly the group generated by
    the unit generators.
    """
    return unit_generators(C)


def is_conical(C: Cone) -> bool:
    return all(u.is_zero() for u in units_subgroup(C))


def is_nonzero_closed(C: Cone) -> bool:
    """Whether the nonzero elements of the cone are closed under addition.

    Decided directly: is there a nonempty nonnegative combination of the
    nonzero generators that sums to zero?  One feasibility query, with an
    extra row forcing the coefficients to sum to at least one.
    """
    nonzero = [s for s in C.generators if not s.is_zero()]
    if not nonzero:
        return True
    P = C.presentation
    k = len(P.invariant_factors)
    n_rows = k + P.free_rank
    cols = [tuple(s.canonical) + (1,) for s in nonzero]
    for i, d in enumerate(P.invariant_factors):
        cols.append(tuple(-d if r == i else 0 for r in range(n_rows)) + (0,))
    cols.append((0,) * n_rows + (-1,))
    A = IntMatrix.from_columns(cols, n_rows + 1)
    res = nonneg_integer_feasible(A, [0] * n_rows + [1], lexmin=False)
    return not res.feasible


def minimal_generators(C: Cone) -> list[GroupElement]:
    """An irredundant generating subset.

    Generators are tried in lexicographic order and dropped when they lie in
    the monoid generated by the ones still kept.
    """
    kept = sorted((s for s in C.generators if not s.is_zero()), key=lambda s: s.canonical)
    i = 0
    while i < len(kept):
        others = Cone(C.presentation, kept[:i] + kept[i + 1:])
        if kept[i] in others:
            del kept[i]
        else:
            i += 1
    return kept


def _free_part(g: GroupElement) -> tuple[int, ...]:
    k = len(g.presentation.invariant_factors)
    return g.canonical[k:]


def rational_rank(gens: Sequence[GroupElement]) -> int:
    """Rank over Q of the given elements (torsion contributes nothing)."""
    if not gens:
        return 0
    P = gens[0].presentation
    if P.free_rank == 0:
        return 0
    return rank(IntMatrix.from_columns([_free_part(g) for g in gens], P.free_rank))


def is_free_cone(C: Cone) -> bool:
    """Whether the minimal generators are Q-linearly independent modulo relations."""
    gens = minimal_generators(C)
    return rational_rank(gens) == len(gens)


def cone_rank(C: Cone) -> int:
    return rational_rank(minimal_generators(C))
