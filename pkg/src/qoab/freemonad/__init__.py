"""Free quasi-ordered groups over injective set maps, the induced monad, and
its Eilenberg-Moore algebras."""

from .setm import SetmError, SetmMorphism, SetmObject
from .words import PosWord, Word, eta, mu
from .adjunction import (LawReport, check_monad_laws, check_triangle_identities,
                         counit_component, element_to_word, free_object,
                         free_on_morphism, monad_mu, unit_component, word_to_element)
from .em import (EmAlgebra, EmError, check_em_laws, em_check, em_to_qab, em_violations,
                 qab_to_em, roundtrip_em, roundtrip_qab, z2_full_cone_algebra)
from .classify import (NotFreeError, classify_free, defect, find_signed_permutation_iso,
                       free_iso_class, is_antichain, is_chain, is_free_qobject, is_lattice,
                       rank, shape)

__all__ = [
    "SetmError", "SetmMorphism", "SetmObject", "PosWord", "Word", "eta", "mu",
    "LawReport", "check_monad_laws", "check_triangle_identities", "counit_component",
    "element_to_word", "free_object", "free_on_morphism", "monad_mu", "unit_component",
    "word_to_element", "EmAlgebra", "EmError", "check_em_laws", "em_check", "em_to_qab",
    "em_violations", "qab_to_em", "roundtrip_em", "roundtrip_qab", "z2_full_cone_algebra",
    "NotFreeError", "classify_free", "defect", "find_signed_permutation_iso",
    "free_iso_class", "is_antichain", "is_chain", "is_free_qobject", "is_lattice",
    "rank", "shape",
]
