# Finite presentations: words, Seifert and semidirect builders, periodic automorphisms
from fp_groups.errors import (
    PresentationError,
    UnknownGeneratorError,
    UnsupportedWordProblemError,
    AutomorphismError,
    IsomorphismCheckFailure,
)
from fp_groups.words import (
    free_reduce,
    dehn_reduce,
    inverse,
    commutator,
    cyclic_reduce,
    free_conjugator,
    surface_relator,
)
from fp_groups.presentation import (
    PeripheralMark,
    Presentation,
    parse_word,
    format_word,
    format_presentation,
    parse_presentation,
    exponent_matrix,
    abelian_invariants,
    word_reducer,
)
from fp_groups.builders import (
    presentation_closed_sfs,
    presentation_bounded_sfs,
    presentation_sfs,
    presentation_orbifold_group,
    free_group,
    surface_group,
    build_semidirect,
    mapping_torus,
    direct_with_Z,
)
from fp_groups.automorphism import (
    FreeAutomorphism,
    BasisChange,
    SemidirectContext,
    Lemma21Result,
    semidirect_normal_form,
    lemma21_iso,
    STANDARD_AUTOMORPHISMS,
)
