import pytest

from fp_groups import (
    AutomorphismError,
    FreeAutomorphism,
    PeripheralMark,
    Presentation,
    PresentationError,
    STANDARD_AUTOMORPHISMS,
    UnsupportedWordProblemError,
    abelian_invariants,
    build_semidirect,
    direct_with_Z,
    format_presentation,
    free_group,
    free_reduce,
    inverse,
    presentation_bounded_sfs,
    presentation_closed_sfs,
    presentation_orbifold_group,
    presentation_sfs,
    surface_group,
)
from seifert import SeifertData

TREFOIL = SeifertData(0, 1, None, ((2, 1), (3, 1)))


def test_closed_presentation_text():
    P = presentation_closed_sfs(SeifertData(0, 0, -1, ((2, 1), (4, 1), (4, 1))))
    assert P.generator_names == ("x1", "x2", "x3", "t")
    assert format_presentation(P) == (
        "< x1, x2, x3, t | "
        "x1 t x1^-1 t^-1, x2 t x2^-1 t^-1, x3 t x3^-1 t^-1, "
        "x1 x1 t, x2 x2 x2 x2 t, x3 x3 x3 x3 t, "
        "x1 x2 x3 t >"
    )


def test_closed_presentation_with_genus():
    P = presentation_closed_sfs(SeifertData(1, 0, 2, ((3, 2),)))
    assert P.generator_names == ("x1", "a1", "b1", "t")
    assert P.relators[-1] == (1, 2, 3, -2, -3, -4, -4)


def test_bounded_presentation_marks():
    P = presentation_bounded_sfs(TREFOIL)
    assert P.generator_names == ("x1", "x2", "y1", "t")
    assert P.relators[-1] == (1, 2, 3)
    mark = P.peripheral_marks[0]
    assert mark.name == "boundary 1"
    assert mark.words == ((3,), (4,))


def test_builders_reject_wrong_kind():
    with pytest.raises(PresentationError):
        presentation_closed_sfs(TREFOIL)
    with pytest.raises(PresentationError):
        presentation_bounded_sfs(SeifertData(0, 0, 0))


@pytest.mark.parametrize("M, expected", [
    (TREFOIL, (1, ())),
    (SeifertData(0, 0, -1, ((2, 1), (3, 1), (5, 1))), (0, ())),
    (SeifertData(1, 0, 0), (3, ())),
    (SeifertData(0, 0, -1, ((2, 1), (4, 1), (4, 1))), (1, (2,))),
    (SeifertData(0, 2, None), (2, ())),
])
def test_first_homology(M, expected):
    assert abelian_invariants(presentation_sfs(M)) == expected


def test_orbifold_group():
    P = presentation_orbifold_group(TREFOIL)
    assert P.generator_names == ("x1", "x2", "y1")
    assert P.relators == ((1, 1), (2, 2, 2), (1, 2, 3))
    assert P.peripheral_marks[0].words == ((3,),)
    assert not P.peripheral_marks[0].product_with_center


def test_orbifold_group_of_closed_manifold():
    P = presentation_orbifold_group(SeifertData(0, 0, -1, ((2, 1), (3, 1), (5, 1))))
    assert P.relators[-1] == (1, 2, 3)
    assert P.peripheral_marks == ()


def test_free_and_surface_groups():
    assert free_group(2).generator_names == ("a", "b")
    assert free_group(9).generator_names[0] == "f1"
    assert surface_group(2).generator_names == ("a1", "b1", "a2", "b2")
    with pytest.raises(PresentationError):
        surface_group(0)


def test_semidirect_relators():
    psi = STANDARD_AUTOMORPHISMS["f2-order3"]()
    G = build_semidirect(psi.domain, psi)
    assert G.generator_names == ("a", "b", "t")
    assert G.relators == ((3, 1, -3, -2), (3, 2, -3, 1, 2))


def test_semidirect_peripheral_mark():
    psi = STANDARD_AUTOMORPHISMS["f2-order3"]()
    G = build_semidirect(psi.domain, psi)
    d, w_inv_t = G.peripheral_marks[0].words
    assert d == (1, 2, -1, -2)
    assert w_inv_t[-1] == 3
    w = inverse(w_inv_t[:-1])
    assert free_reduce(psi.apply(d)) == free_reduce(w + d + inverse(w))


def test_semidirect_mark_needs_free_fiber():
    psi = STANDARD_AUTOMORPHISMS["torus-order4"]()
    marked = Presentation(psi.domain.generator_names, psi.domain.relators,
                          (PeripheralMark("m", ((1,),)),))
    psi_marked = FreeAutomorphism(marked, psi.images, psi.inverse_images, psi.order)
    with pytest.raises(UnsupportedWordProblemError):
        build_semidirect(marked, psi_marked)


def test_semidirect_rejects_mark_not_preserved():
    F2 = free_group(2)
    marked = Presentation(F2.generator_names, (), (PeripheralMark("m", ((1,),)),))
    psi = FreeAutomorphism(marked, ((2,), (1,)), ((2,), (1,)), 2)
    # a and b are not conjugate in F2
    with pytest.raises(AutomorphismError):
        build_semidirect(marked, psi)


def test_direct_with_Z():
    P = presentation_sfs(TREFOIL)
    Q = direct_with_Z(P)
    assert Q.generator_names == P.generator_names + ("s",)
    assert Q.relators[-1] == (5, 4, -5, -4)
    assert Q.peripheral_marks[0].words == ((3,), (4,), (5,))
    assert abelian_invariants(Q) == (2, ())


def test_direct_with_Z_keeps_orbifold_marks():
    P = presentation_orbifold_group(TREFOIL)
    Q = direct_with_Z(P)
    assert Q.peripheral_marks[0].words == ((3,),)
