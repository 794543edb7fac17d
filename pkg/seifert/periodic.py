"""
Periodic surface homeomorphisms and the Seifert fibrations of their mapping tori.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from sympy import igcd, ilcm, mod_inverse

from seifert.errors import InvalidSeifertDataError, UnrealizableMapError
from seifert.invariants import SeifertData, check_integer, require_periodic_bundle


@dataclass(frozen=True)
class PeriodicMapData:
    """
    A periodic map phi of order n on a surface F, described by its quotient orbifold:
    genus and boundary count of F/<phi> and the cone points (alpha, q), where
    phi^(n/alpha) rotates a disk around a point with stabilizer of order alpha by 2*pi*q/alpha.
    """

    order: int
    quotient_genus: int
    quotient_boundary_count: int
    cone_points: tuple = ()

    def __post_init__(self):
        for name in ("order", "quotient_genus", "quotient_boundary_count"):
            object.__setattr__(self, name, check_integer(getattr(self, name), name))
        if self.order < 1:
            raise InvalidSeifertDataError(f"order must be positive, got {self.order}")
        if self.quotient_genus < 0 or self.quotient_boundary_count < 0:
            raise InvalidSeifertDataError("quotient genus and boundary count must be non-negative")

        cones = []
        for alpha, q in self.cone_points:
            alpha, q = check_integer(alpha, "cone order"), check_integer(q, "cone rotation")
            if alpha < 2 or not 0 < q < alpha or igcd(alpha, q) != 1:
                raise InvalidSeifertDataError(f"cone point ({alpha}, {q}) is not normalized")
            if self.order % alpha:
                raise InvalidSeifertDataError(f"cone order {alpha} does not divide the map order {self.order}")
            cones.append((alpha, q))
        object.__setattr__(self, "cone_points", tuple(sorted(cones)))

        if cones:
            lcm = 1
            for alpha, _ in cones:
                lcm = int(ilcm(lcm, alpha))
            if lcm != self.order:
                raise InvalidSeifertDataError(
                    f"cone orders have lcm {lcm}, so the map cannot have exact order {self.order}"
                )

    def to_dict(self) -> dict:
        return {
            "order": self.order,
            "quotient_genus": self.quotient_genus,
            "quotient_boundary_count": self.quotient_boundary_count,
            "cone_points": [list(cone) for cone in self.cone_points],
        }


@dataclass(frozen=True)
class BoundaryCurves:
    """Fiber surface F meets torus T_i in `curve_count` parallel curves of class x_coeff*[x_i] + t_coeff*[t]."""

    torus_index: int
    curve_count: int
    x_coeff: int
    t_coeff: int

    def as_tuple(self) -> tuple:
        return (self.torus_index, self.curve_count, (self.x_coeff, self.t_coeff))


def periodic_map_from_seifert(M: SeifertData) -> PeriodicMapData:
    """Monodromy of the minimal surface bundle structure: order lambda, q_i = beta_i^-1 mod alpha_i."""
    require_periodic_bundle(M, "periodic_map_from_seifert")
    cones = tuple((alpha, mod_inverse(beta, alpha)) for alpha, beta in M.fiber_invariants)
    return PeriodicMapData(
        order=M.monodromy_order,
        quotient_genus=M.genus,
        quotient_boundary_count=M.boundary_count,
        cone_points=cones,
    )


def seifert_from_periodic_map(P: PeriodicMapData, obstruction: int | None = None) -> SeifertData:
    """
    Seifert invariants of the mapping torus of P.

    For a closed quotient the obstruction is forced by e = 0; pass `obstruction`
    to have an expected value checked against the forced one.
    """
    fibers = tuple((alpha, mod_inverse(q, alpha)) for alpha, q in P.cone_points)

    if P.quotient_boundary_count > 0:
        if obstruction is not None:
            raise InvalidSeifertDataError("an obstruction only makes sense for a closed quotient")
        return SeifertData(P.quotient_genus, P.quotient_boundary_count, None, fibers)

    total = sum(Fraction(beta, alpha) for alpha, beta in fibers)
    if total.denominator != 1:
        raise UnrealizableMapError(
            f"cone data {list(P.cone_points)} forces b = {-total}, which is not an integer"
        )
    forced = -int(total)
    if obstruction is not None and obstruction != forced:
        raise UnrealizableMapError(f"obstruction {obstruction} contradicts e = 0 (forced b = {forced})")
    return SeifertData(P.quotient_genus, 0, forced, fibers)


def fiber_boundary_data(M: SeifertData) -> list:
    """
    How the fiber F of the bundle structure meets the filling tori.

    Singular torus T_i carries lambda/alpha_i parallel curves of class
    alpha_i[x_i] + beta_i[t]. For closed M the distinguished torus T_0 carries
    lambda curves of class [x_0] + b[t]; the intermediate computation gives
    -[x_0] - b[t] and the stored sign is the restated one.
    """
    require_periodic_bundle(M, "fiber_boundary_data")
    lam = M.monodromy_order
    curves = [
        BoundaryCurves(index, lam // alpha, alpha, beta)
        for index, (alpha, beta) in enumerate(M.fiber_invariants, start=1)
    ]
    if M.is_closed:
        curves.append(BoundaryCurves(0, lam, 1, M.obstruction))
    return curves
