import math
import random
from fractions import Fraction

import numpy as np
import pytest

from config import RANDOM_SEED
from data.generate_instances import random_periodic_bundle, random_seifert_data

from seifert import (
    EUCLIDEAN_TORUS_BUNDLES,
    ExceptionalManifoldError,
    Geometry,
    InvalidSeifertDataError,
    NotPeriodicBundleError,
    Parity,
    PeriodicMapData,
    SeifertData,
    SeifertError,
    UnitError,
    UnrealizableMapError,
    classify,
    distinguishing_k_guaranteed,
    euler_number,
    family_enumerate,
    fiber_boundary_data,
    find_distinguishing_k,
    is_exceptional_fibering,
    is_homeomorphic,
    lens_invariants,
    periodic_map_from_seifert,
    power_monodromy,
    power_orbit,
    residue_family,
    reverse_orientation,
    seifert_from_periodic_map,
    unoriented_representative,
)

FIVES = SeifertData(0, 0, -1, ((5, 1), (5, 1), (5, 3)))
TREFOIL = SeifertData(0, 1, None, ((2, 1), (3, 1)))
KNOT_34 = SeifertData(0, 1, None, ((3, 1), (4, 1)))


# ---------------------------------------------------------------
# SeifertData
# ---------------------------------------------------------------

def test_fibers_are_sorted():
    M = SeifertData(0, 0, -1, ((4, 1), (2, 1), (4, 1)))
    assert M.fiber_invariants == ((2, 1), (4, 1), (4, 1))
    assert M.alphas == (2, 4, 4)
    assert M.monodromy_order == 4


def test_str_form():
    assert str(SeifertData(0, 0, -1, ((2, 1), (4, 1), (4, 1)))) == "SFS(g=0, s=0, b=-1; 1/2, 1/4, 1/4)"
    assert str(SeifertData(1, 0, 0)) == "SFS(g=1, s=0, b=0;)"
    assert str(TREFOIL) == "SFS(g=0, s=1; 1/2, 1/3)"


@pytest.mark.parametrize("args", [
    (0, 0, None, ()),
    (0, 1, 0, ()),
    (-1, 0, 0, ()),
    (0, 0, 0, ((4, 2),)),
    (0, 0, 0, ((1, 0),)),
    (0, 0, 0, ((3, 3),)),
    (0, 1, None, ((5, 1.5),)),
    (0, 1, None, ((5.0, 1),)),
    (0, 1, None, ((5, True),)),
    (0, 1, None, ((5, "1"),)),
    (0, 1, None, ((5, 1, 2),)),
])
def test_invalid_data_is_rejected(args):
    with pytest.raises(InvalidSeifertDataError):
        SeifertData(*args)


def test_no_fibers_has_lambda_one():
    assert SeifertData(2, 0, 0).monodromy_order == 1


def test_numpy_integers_are_accepted():
    M = SeifertData(0, 1, None, ((np.int64(5), np.int32(2)),))
    assert M == SeifertData(0, 1, None, ((5, 2),))
    assert type(M.fiber_invariants[0][0]) is int


# ---------------------------------------------------------------
# classify
# ---------------------------------------------------------------

def test_classify_euclidean_anchor():
    c = classify(SeifertData(0, 0, -1, ((2, 1), (4, 1), (4, 1))))
    assert c.euler_number == 0
    assert c.orbifold_chi == 0
    assert c.lam == 4
    assert c.parity is Parity.EVEN
    assert c.geometry is Geometry.EUCLIDEAN
    assert c.is_periodic_bundle
    assert c.fiber_genus == 1
    assert c.fiber_boundary_circles == 0
    assert c.minimal_torsion_free_index == 4


@pytest.mark.parametrize("M, lam", EUCLIDEAN_TORUS_BUNDLES)
def test_euclidean_torus_bundles(M, lam):
    c = classify(M)
    assert (c.euler_number, c.orbifold_chi, c.lam, c.fiber_genus) == (0, 0, lam, 1)


def test_classify_hyperbolic_closed():
    c = classify(FIVES)
    assert c.euler_number == 0
    assert c.orbifold_chi == Fraction(-2, 5)
    assert c.geometry is Geometry.HYPERBOLIC
    assert c.fiber_genus == 2


def test_classify_knot_complements():
    trefoil = classify(TREFOIL)
    assert trefoil.euler_number is None
    assert trefoil.orbifold_chi == Fraction(-1, 6)
    assert (trefoil.lam, trefoil.fiber_genus, trefoil.fiber_boundary_circles) == (6, 1, 1)

    knot = classify(KNOT_34)
    assert (knot.lam, knot.fiber_genus, knot.fiber_boundary_circles) == (12, 3, 1)


def test_odd_parity_needs_nonzero_euler_number():
    c = classify(SeifertData(1, 0, 0, ((2, 1),)))
    assert c.euler_number == Fraction(-1, 2)
    assert c.parity is Parity.ODD
    assert not c.is_periodic_bundle
    assert c.fiber_genus is None
    assert c.minimal_torsion_free_index == 4


def test_spherical_geometry():
    c = classify(SeifertData(0, 0, -1, ((2, 1), (3, 1), (5, 1))))
    assert c.geometry is Geometry.SPHERICAL
    assert c.minimal_torsion_free_index is None


# ---------------------------------------------------------------
# orientation, powers, homeomorphism
# ---------------------------------------------------------------

def test_reverse_orientation():
    R = reverse_orientation(SeifertData(0, 0, -1, ((2, 1), (4, 1), (4, 1))))
    assert R == SeifertData(0, 0, -2, ((2, 1), (4, 3), (4, 3)))
    assert reverse_orientation(R) == SeifertData(0, 0, -1, ((2, 1), (4, 1), (4, 1)))


def test_reverse_keeps_euler_number_zero():
    assert classify(reverse_orientation(FIVES)).euler_number == 0


def test_power_of_closed_bundle():
    assert power_monodromy(FIVES, 2) == SeifertData(0, 0, -2, ((5, 3), (5, 3), (5, 4)))


def test_power_of_bounded_bundle():
    assert power_monodromy(KNOT_34, 7) == SeifertData(0, 1, None, ((3, 1), (4, 3)))


def test_power_one_is_identity():
    assert power_monodromy(FIVES, 1) == FIVES
    assert power_monodromy(FIVES, 6) == FIVES


def test_power_errors():
    with pytest.raises(UnitError):
        power_monodromy(SeifertData(0, 0, -1, ((2, 1), (4, 1), (4, 1))), 2)
    with pytest.raises(NotPeriodicBundleError):
        power_monodromy(SeifertData(0, 0, 0, ((2, 1),)), 3)


def test_power_minus_one_is_orientation_reversal():
    assert power_monodromy(FIVES, 4) == reverse_orientation(FIVES)


def test_power_orbit():
    orbit = power_orbit(FIVES)
    assert len(orbit) == 2
    assert unoriented_representative(FIVES) in orbit


def test_homeomorphism():
    N = power_monodromy(FIVES, 2)
    assert not is_homeomorphic(FIVES, N)
    assert is_homeomorphic(FIVES, reverse_orientation(FIVES))
    assert not is_homeomorphic(FIVES, reverse_orientation(FIVES), oriented=True)
    assert is_homeomorphic(FIVES, FIVES, oriented=True)


EXCEPTIONAL = [
    SeifertData(0, 0, 0),
    SeifertData(0, 0, -1, ((2, 1), (2, 1))),
    SeifertData(0, 0, -1, ((5, 2), (5, 3))),
    SeifertData(0, 1, None, ((3, 1),)),
    SeifertData(0, 1, None, ((5, 1),)),
    SeifertData(0, 2, None),
]


@pytest.mark.parametrize("M", EXCEPTIONAL)
def test_exceptional_fiberings(M):
    assert is_exceptional_fibering(M)
    with pytest.raises(ExceptionalManifoldError):
        is_homeomorphic(M, M)


@pytest.mark.parametrize("M", EXCEPTIONAL)
def test_exceptional_fiberings_have_no_distinguishing_power(M):
    assert find_distinguishing_k(M) is None
    assert power_orbit(M) == [unoriented_representative(M)]


def test_distinguishing_k():
    assert find_distinguishing_k(FIVES) == 2
    assert not distinguishing_k_guaranteed(FIVES)

    M = SeifertData(0, 1, None, ((2, 1), (5, 1)))
    assert distinguishing_k_guaranteed(M)
    assert find_distinguishing_k(M) == 3


# ---------------------------------------------------------------
# families
# ---------------------------------------------------------------

def test_residue_family_seven():
    M = residue_family(7)
    assert M == SeifertData(0, 0, -1, ((7, 1), (7, 2), (7, 4)))
    assert classify(M).euler_number == 0
    assert find_distinguishing_k(M) is None


@pytest.mark.parametrize("p", [7, 11, 19])
def test_residue_family_is_rigid(p):
    M = residue_family(p)
    assert len(power_orbit(M)) == 1


def test_residue_family_one_mod_four_is_not_rigid():
    # -1 is a square mod 13, so reversal cannot undo a non-residue power
    M = residue_family(13)
    assert M.obstruction == -3
    assert reverse_orientation(M) == M
    assert len(power_orbit(M)) == 2
    assert find_distinguishing_k(M) == 2


@pytest.mark.parametrize("p", [2, 5, 9])
def test_residue_family_bad_input(p):
    with pytest.raises(SeifertError):
        residue_family(p)


def test_family_enumerate():
    assert family_enumerate(2, 3) == [TREFOIL]
    assert len(family_enumerate(3, 4)) == 2
    assert len(family_enumerate(5, 7)) == 12
    with pytest.raises(SeifertError):
        family_enumerate(2, 4)


def test_lens_invariants():
    L = lens_invariants(TREFOIL, 0)
    assert (L.p, L.q, L.gamma1, L.delta1) == (5, 2, 1, 1)
    assert L.q_as_stated

    assert lens_invariants(TREFOIL, -1).p == 1
    assert lens_invariants(TREFOIL, -1).q == 0


def test_lens_invariants_needs_two_fibers():
    with pytest.raises(SeifertError):
        lens_invariants(SeifertData(0, 1, None, ((2, 1), (3, 1), (5, 1))), 0)


# ---------------------------------------------------------------
# periodic maps
# ---------------------------------------------------------------

def test_periodic_map_from_seifert():
    P = periodic_map_from_seifert(FIVES)
    assert P.order == 5
    assert P.cone_points == ((5, 1), (5, 1), (5, 2))
    assert (P.quotient_genus, P.quotient_boundary_count) == (0, 0)


def test_seifert_from_periodic_map():
    P = PeriodicMapData(4, 0, 0, ((4, 1), (2, 1), (4, 1)))
    assert seifert_from_periodic_map(P) == SeifertData(0, 0, -1, ((2, 1), (4, 1), (4, 1)))
    assert seifert_from_periodic_map(P, obstruction=-1).obstruction == -1
    with pytest.raises(UnrealizableMapError):
        seifert_from_periodic_map(P, obstruction=0)


@pytest.mark.parametrize("M", [FIVES, TREFOIL, KNOT_34, SeifertData(2, 0, 0), SeifertData(1, 2, None, ((6, 5),))])
def test_periodic_round_trip(M):
    assert seifert_from_periodic_map(periodic_map_from_seifert(M)) == M


def test_unrealizable_cone_data():
    with pytest.raises(UnrealizableMapError):
        seifert_from_periodic_map(PeriodicMapData(2, 0, 0, ((2, 1),)))


@pytest.mark.parametrize("order, cones", [
    (6, ((2, 1), (4, 1))),
    (12, ((2, 1), (3, 1))),
    (4, ((4, 2),)),
    (4, ((4, 1.5),)),
    (4.0, ((4, 1),)),
    (True, ()),
])
def test_invalid_periodic_map(order, cones):
    with pytest.raises(InvalidSeifertDataError):
        PeriodicMapData(order, 0, 1, cones)


def test_fiber_boundary_data():
    curves = fiber_boundary_data(SeifertData(0, 0, -1, ((2, 1), (4, 1), (4, 1))))
    assert [c.as_tuple() for c in curves] == [
        (1, 2, (2, 1)),
        (2, 1, (4, 1)),
        (3, 1, (4, 1)),
        (0, 4, (1, -1)),
    ]


def test_fiber_boundary_data_bounded():
    curves = fiber_boundary_data(TREFOIL)
    assert [c.as_tuple() for c in curves] == [(1, 3, (2, 1)), (2, 2, (3, 1))]


# ---------------------------------------------------------------
# randomized properties
# ---------------------------------------------------------------

def units(lam):
    return [k for k in range(1, lam + 1) if math.gcd(k, lam) == 1]


def test_residue_seven_fiber_surface():
    c = classify(SeifertData(0, 0, -1, ((7, 1), (7, 2), (7, 4))))
    assert c.euler_number == 0
    assert (c.lam, c.fiber_genus, c.fiber_boundary_circles) == (7, 3, 0)


def test_powers_compose():
    rng = random.Random(RANDOM_SEED)
    for _ in range(300):
        M = random_periodic_bundle(rng)
        k, j = rng.choice(units(M.monodromy_order)), rng.choice(units(M.monodromy_order))
        assert power_monodromy(power_monodromy(M, k), j) == power_monodromy(M, k * j)
        assert power_monodromy(M, -k) == reverse_orientation(power_monodromy(M, k))


def test_reversal_is_an_involution():
    rng = random.Random(RANDOM_SEED + 1)
    for _ in range(500):
        M = random_seifert_data(rng)
        R = reverse_orientation(M)
        assert reverse_orientation(R) == M
        if M.is_closed:
            assert euler_number(R) == -euler_number(M)
        else:
            assert euler_number(R) is None


def test_fiber_genus_satisfies_riemann_hurwitz():
    rng = random.Random(RANDOM_SEED + 2)
    for _ in range(300):
        M = random_periodic_bundle(rng)
        c = classify(M)
        assert c.is_periodic_bundle
        assert c.fiber_genus >= 0
        assert 2 - 2 * c.fiber_genus - c.fiber_boundary_circles == c.lam * c.orbifold_chi

        k = rng.choice(units(c.lam))
        assert classify(power_monodromy(M, k)).fiber_genus == c.fiber_genus
