from collections import Counter

import pytest

from fp_groups import Presentation, parse_presentation, presentation_sfs
from quotient_engine import (
    BudgetExceededError,
    SearchBudget,
    enumerate_normal_tables,
    finite_group_iso,
    low_index_normal_quotients,
    quotient_from_table,
)
from quotient_engine.low_index import relator_columns
from seifert import SeifertData

Z = Presentation(("a",))
F2 = parse_presentation("< a, b | >")
Z2 = parse_presentation("< a, b | a b a^-1 b^-1 >")
D4 = parse_presentation("< a, b | a^4, b^2, a b a b >")


def test_relator_columns():
    assert relator_columns((1, -2, 3)) == (0, 3, 4)


@pytest.mark.parametrize("P, n, expected", [
    (Z, 6, [1, 1, 1, 1, 1, 1]),
    (F2, 3, [1, 3, 4]),
    (Z2, 4, [1, 3, 4, 7]),
    (D4, 8, [1, 3, 0, 1, 0, 0, 0, 1]),
])
def test_normal_subgroup_counts(P, n, expected):
    tables = enumerate_normal_tables(P, n)
    counts = Counter(t.index for t in tables)
    assert [counts[k] for k in range(1, n + 1)] == expected


def test_tables_are_complete_normal_and_sorted():
    tables = enumerate_normal_tables(Z2, 4)
    assert all(t.is_complete and t.is_normal() for t in tables)
    keys = [(t.index, t.rows) for t in tables]
    assert keys == sorted(keys)
    assert len(set(tables)) == len(tables)


def test_coset_table_trace_and_transversal():
    table = [t for t in enumerate_normal_tables(Z, 3) if t.index == 3][0]
    assert table.trace(0, (1, 1, 1)) == 0
    assert table.trace(0, (-1,)) == 2
    words = table.transversal()
    assert words[0] == ()
    assert all(table.trace(0, [1 if col == 0 else -1 for col in w]) == c for c, w in enumerate(words))


def test_quotients_of_Z_are_cyclic():
    for G in low_index_normal_quotients(Z, 5):
        assert int(G.element_orders.max()) == G.order


def test_dihedral_quotient_is_itself():
    groups = low_index_normal_quotients(D4, 8)
    top = [G for G in groups if G.order == 8][0]
    assert not top.is_abelian
    assert Counter(top.element_orders.tolist()) == {1: 1, 2: 5, 4: 2}


def test_no_generators():
    tables = enumerate_normal_tables(Presentation(()), 3)
    assert len(tables) == 1
    assert quotient_from_table(Presentation(()), tables[0]).order == 1


def test_marked_quotients():
    P = presentation_sfs(SeifertData(0, 1, None, ((2, 1), (3, 1))))
    groups = low_index_normal_quotients(P, 6)
    assert all(G.marked_subgroup is not None for G in groups)
    S3 = [G for G in groups if G.order == 6 and not G.is_abelian]
    assert len(S3) == 1
    # the boundary torus maps onto a cyclic subgroup of order 2 in S3
    assert len(S3[0].marked_subgroup) == 2


def test_budget_exceeded():
    with pytest.raises(BudgetExceededError):
        enumerate_normal_tables(Z2, 4, SearchBudget(max_nodes=2))


def test_parallel_budget_is_checked_before_fan_out():
    with pytest.raises(BudgetExceededError):
        enumerate_normal_tables(Z2, 4, SearchBudget(max_nodes=2, workers=2))


def test_bad_index_bound():
    with pytest.raises(ValueError):
        enumerate_normal_tables(Z, 0)


def test_parallel_search_matches_serial():
    serial = enumerate_normal_tables(Z2, 4)
    parallel = enumerate_normal_tables(Z2, 4, SearchBudget(workers=2))
    assert [t.rows for t in parallel] == [t.rows for t in serial]


def test_quotients_match_tables():
    for table in enumerate_normal_tables(F2, 3):
        G = quotient_from_table(F2, table)
        assert G.order == table.index
        if G.order == 2:
            assert finite_group_iso(G, quotient_from_table(Z, enumerate_normal_tables(Z, 2)[1]))
