import numpy as np
import pytest

from fp_groups import (
    STANDARD_AUTOMORPHISMS,
    AutomorphismError,
    BasisChange,
    FreeAutomorphism,
    SemidirectContext,
    UnsupportedWordProblemError,
    free_group,
    lemma21_iso,
    parse_presentation,
    semidirect_normal_form,
)


@pytest.fixture(scope="module")
def order3():
    return STANDARD_AUTOMORPHISMS["f2-order3"]()


@pytest.mark.parametrize("name, order", [
    ("f2-order3", 3),
    ("f2-identity", 1),
    ("torus-order4", 4),
    ("torus-order6", 6),
])
def test_standard_automorphisms(name, order):
    psi = STANDARD_AUTOMORPHISMS[name]()
    assert psi.order == order
    identity = tuple((x,) for x in range(1, psi.domain.generator_count + 1))
    assert all(psi.equal(image, x) for image, x in zip(psi.power_images(order), identity))


def test_powers(order3):
    assert order3.apply((1,), 2) == (-2, -1)
    assert order3.apply((1,), -1) == (-2, -1)
    assert order3.apply((1, 2)) == (-1,)

    square = order3.power(2)
    assert square.order == 3
    assert square.images == ((-2, -1), (1,))


def test_power_with_common_factor():
    psi = STANDARD_AUTOMORPHISMS["torus-order4"]()
    square = psi.power(2)
    assert square.order == 2
    assert square.equal(square.apply((1,)), (-1,))


def test_cyclic_domain():
    C5 = parse_presentation("< a | a^5 >")
    psi = FreeAutomorphism(C5, ((1, 1),), ((1, 1, 1),), 4)
    assert psi.apply((1,), 3) == (1, 1, 1)


@pytest.mark.parametrize("images, inverse_images, order", [
    (((2,), (1,)), ((2,), (1,)), 1),
    (((1, 1), (2,)), ((1,), (2,)), 1),
    (((2,),), ((2,),), 1),
])
def test_invalid_automorphisms(images, inverse_images, order):
    with pytest.raises(AutomorphismError):
        FreeAutomorphism(free_group(2), images, inverse_images, order)


def test_unsupported_domain():
    P = parse_presentation("< a, b | a^2 >")
    with pytest.raises(UnsupportedWordProblemError):
        FreeAutomorphism(P, ((2,), (1,)), ((2,), (1,)), 2)


def test_basis_change():
    basis = BasisChange(k=2, n=3, u=1, v=-1)
    assert basis.determinant == 1
    np.testing.assert_array_equal(basis.image_matrix @ basis.lattice_matrix, np.eye(2, dtype=np.int64))
    with pytest.raises(AutomorphismError):
        BasisChange(k=2, n=3, u=1, v=1)


def test_semidirect_normal_form(order3):
    ctx = SemidirectContext(order3.domain, order3)
    assert semidirect_normal_form((3, 1, -3), ctx) == ((2,), 0, 0)
    assert semidirect_normal_form((3, 1), ctx) == ((2,), 1, 0)
    assert semidirect_normal_form((4, 1, -4), ctx) == ((1,), 0, 0)
    assert semidirect_normal_form((3, 3, 3, 1, -3, -3, -3), ctx) == ((1,), 0, 0)
    with pytest.raises(AutomorphismError):
        semidirect_normal_form((5,), ctx)


def test_semidirect_context_presentation(order3):
    ctx = SemidirectContext(order3.domain, order3)
    assert ctx.presentation.generator_names == ("a", "b", "t", "s")
    assert len(ctx.presentation.relators) == 5


def test_lemma21_order3(order3):
    result = lemma21_iso(order3.domain, order3, 2)
    assert (result.basis.u, result.basis.v) == (1, -1)
    assert result.relators_checked == 5
    assert result.abelian_invariants == (2, (3,))
    assert result.target.generator_names == ("a", "b", "tau", "sigma")

    data = result.to_dict()
    assert data["determinant"] == 1
    assert data["map"]["a"] == "a"
    assert data["map"]["t"] == "tau^-1 sigma"
    assert data["map"]["s"] == "tau^-1 tau^-1 tau^-1 sigma sigma"


@pytest.mark.parametrize("name, k", [
    ("f2-order3", 4),
    ("f2-order3", -1),
    ("f2-identity", 5),
    ("torus-order4", 3),
    ("torus-order6", 5),
])
def test_lemma21_verifies(name, k):
    psi = STANDARD_AUTOMORPHISMS[name]()
    result = lemma21_iso(psi.domain, psi, k)
    b = result.basis
    assert b.u * b.n + b.v * b.k == 1
    assert result.relators_checked == len(result.source.relators)


def test_lemma21_needs_unit(order3):
    with pytest.raises(AutomorphismError):
        lemma21_iso(order3.domain, order3, 3)


def test_bezout_coefficients():
    from fp_groups.automorphism import igcdex

    for n in range(1, 13):
        for k in range(-n, 2 * n + 1):
            if np.gcd(n, k) != 1:
                continue
            u, v, g = igcdex(n, k)
            assert g == 1
            assert u * n + v * k == 1
