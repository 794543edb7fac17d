# Finite quotients of finitely presented groups: low-index search, isomorphism, G/G(n)
from quotient_engine.errors import (
    QuotientEngineError,
    MissingMarkError,
    InvalidFiniteGroupError,
    BudgetExceededError,
    CofinalityFailure,
)
from quotient_engine.finite_group import (
    FiniteGroup,
    iter_isomorphisms,
    finite_group_iso,
    pair_iso,
    is_homomorphism,
)
from quotient_engine.low_index import (
    SearchBudget,
    CosetTable,
    enumerate_normal_tables,
    quotient_from_table,
    low_index_normal_quotients,
)
from quotient_engine.quotients import (
    QuotientSet,
    Comparison,
    GnData,
    deduplicate,
    quotient_set,
    compare_sets,
    compare_quotient_sets,
    g_n,
    verify_cofinality,
    serialize_group,
    serialize_quotient_set,
    deserialize_group,
)
from quotient_engine.catalogue import catalogue_groups, group_from_permutations, identify
from quotient_engine.homomorphisms import (
    iter_homomorphisms,
    count_homomorphisms,
    hom_count_signature,
    oracle_quotient_set,
)
