"""Rank, defect and the classification of free qo-objects.

A free object is a free abelian group ordered by a cone generated by part
of a basis.  Up to isomorphism it is fixed by ``(defect, rank)``, where
``defect`` counts the basis vectors left out of the cone.
"""

from __future__ import annotations

import itertools
from typing import Optional, Union

from ..cone import Cone, cone_rank, minimal_generators, rational_rank
from ..exactlin import IntMatrix, smith_normal_form
from ..fgab import GroupHom, is_torsion_free
from ..qab import QoGroup
from .setm import SetmObject


class NotFreeError(ValueError):
    pass


def rank(obj: Union[QoGroup, Cone]) -> int:
    """Free rank of a qo-group's group, or the rank of a cone."""
    if isinstance(obj, Cone):
        return cone_rank(obj)
    return obj.group.free_rank


def is_free_qobject(Q: QoGroup) -> bool:
    """Torsion-free group whose cone is generated by part of a basis.

    The minimal generators must be independent and their coordinate matrix
    must have Smith diagonal all ones, i.e. they extend to a basis.
    """
    if not is_torsion_free(Q.group):
        return False
    gens = minimal_generators(Q.cone)
    if not gens:
        return True
    if rational_rank(gens) != len(gens):
        return False
    M = IntMatrix.from_columns([g.canonical for g in gens], Q.group.free_rank)
    return all(abs(d) == 1 for d in smith_normal_form(M).diagonal[:len(gens)])


def _require_free(Q: QoGroup) -> None:
    if not is_free_qobject(Q):
        raise NotFreeError("not a free qo-object")


def defect(Q: QoGroup) -> int:
    _require_free(Q)
    return Q.group.free_rank - cone_rank(Q.cone)


def free_iso_class(Q: QoGroup) -> tuple[int, int]:
    """``(defect, rank)``."""
    return defect(Q), Q.group.free_rank


def classify_free(n: int) -> list[QoGroup]:
    """One free object of rank ``n`` for each defect ``0..n``, in that order."""
    if n < 0:
        raise ValueError("rank must be nonnegative")
    return [SetmObject.standard(n - d, n).free for d in range(n + 1)]


def is_lattice(Q: QoGroup) -> bool:
    return defect(Q) == 0


def is_chain(Q: QoGroup) -> bool:
    return defect(Q) == 0 and Q.group.free_rank == 1


def is_antichain(Q: QoGroup) -> bool:
    return defect(Q) == Q.group.free_rank


def shape(Q: QoGroup) -> str:
    """Decomposition into ordered and discretely ordered copies of Z."""
    d = defect(Q)
    return f"Z-ordered^{Q.group.free_rank - d} + Z-discrete^{d}"


def find_signed_permutation_iso(Q1: QoGroup, Q2: QoGroup) -> Optional[GroupHom]:
    """Search signed permutations of canonical coordinates for an order isomorphism.

    Both groups must be torsion-free.  Returns the hom ``Q1 -> Q2`` or None.
    Used as an independent check on :func:`free_iso_class`.
    """
    if not (is_torsion_free(Q1.group) and is_torsion_free(Q2.group)):
        raise NotFreeError("signed permutation search needs torsion-free groups")
    n = Q1.group.free_rank
    if Q2.group.free_rank != n:
        return None
    P1, P2 = Q1.group, Q2.group
    for perm in itertools.permutations(range(n)):
        for signs in itertools.product((1, -1), repeat=n):
            def image(canon, inverse=False):
                out = [0] * n
                for k in range(n):
                    if inverse:
                        out[k] = signs[k] * canon[perm[k]]
                    else:
                        out[perm[k]] = signs[k] * canon[k]
                return out
            if not all(P2.from_canonical_element(image(s.canonical)) in Q2.cone
                       for s in Q1.cone.generators):
                continue
            if not all(P1.from_canonical_element(image(s.canonical, True)) in Q1.cone
                       for s in Q2.cone.generators):
                continue
            images = [P2.from_canonical_element(image(e.canonical)) for e in P1.generators()]
            return GroupHom(P1, P2, images)
    return None
