import pytest

from fp_groups import Presentation, parse_presentation, presentation_sfs
from quotient_engine import (
    BudgetExceededError,
    MissingMarkError,
    catalogue_groups,
    compare_sets,
    count_homomorphisms,
    hom_count_signature,
    iter_homomorphisms,
    oracle_quotient_set,
    quotient_set,
)
from seifert import SeifertData

Z = Presentation(("a",))
F2 = parse_presentation("< a, b | >")
D4 = parse_presentation("< a, b | a^4, b^2, a b a b >")
TREFOIL = presentation_sfs(SeifertData(0, 1, None, ((2, 1), (3, 1))))


@pytest.fixture(scope="module")
def catalogue():
    return dict(catalogue_groups())


@pytest.mark.parametrize("P, name, count", [
    (Z, "C4", 4),
    (F2, "S3", 36),
    (D4, "C2", 4),
    (parse_presentation("< a | a^6 >"), "C4", 2),
])
def test_count_homomorphisms(catalogue, P, name, count):
    assert count_homomorphisms(P, catalogue[name]) == count


def test_fiber_dies_in_nonabelian_image(catalogue):
    T = catalogue["S3"]
    onto = [images for images in iter_homomorphisms(TREFOIL, T) if T.span(images).size == T.order]
    assert len(onto) == 6
    assert all(images[3] == 0 for images in onto)


def test_signature():
    assert hom_count_signature(Z, 4) == {"C1": 1, "C2": 2, "C3": 3, "C4": 4, "C2xC2": 4}


def test_homomorphism_budget(catalogue):
    with pytest.raises(BudgetExceededError):
        count_homomorphisms(F2, catalogue["S3"], max_nodes=5)


@pytest.mark.parametrize("P, n", [
    (parse_presentation("< a | a^6 >"), 8),
    (D4, 8),
    (F2, 4),
    (TREFOIL, 6),
    (parse_presentation("< a, b | a b a^-1 b^-1 >"), 6),
])
def test_oracle_agrees_with_low_index_search(P, n):
    assert compare_sets(quotient_set(P, n), oracle_quotient_set(P, n)).equal


def test_paired_oracle_agrees():
    assert compare_sets(quotient_set(TREFOIL, 6, paired=True), oracle_quotient_set(TREFOIL, 6, paired=True)).equal
    with pytest.raises(MissingMarkError):
        oracle_quotient_set(Z, 4, paired=True)
