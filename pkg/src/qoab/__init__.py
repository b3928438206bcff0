"""Exact computation with finitely generated quasi-ordered abelian groups."""

from .kernel import BACKEND
from .exactlin import (DimensionError, IntMatrix, nonneg_integer_feasible,
                       smith_normal_form, solve_integer_linear)
from .fgab import (GroupElement, GroupHom, GroupPresentation, IllDefinedHom,
                   PresentationMismatch, cyclic_group, free_group)
from .cone import Cone, MembershipCertificate
from .qab import QoGroup, QoMorphism, antisymmetrize, is_po, leq

__version__ = "0.1.0"

__all__ = [
    "BACKEND", "DimensionError", "IntMatrix", "nonneg_integer_feasible", "smith_normal_form",
    "solve_integer_linear", "GroupElement", "GroupHom", "GroupPresentation", "IllDefinedHom",
    "PresentationMismatch", "cyclic_group", "free_group", "Cone", "MembershipCertificate",
    "QoGroup", "QoMorphism", "antisymmetrize", "is_po", "leq",
]
