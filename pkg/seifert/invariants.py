"""
Classical Seifert invariants of oriented Seifert fibered spaces over oriented bases.
Exact rational arithmetic only: classification, orientation reversal, monodromy powers
and the homeomorphism test for surface bundles with periodic monodromy.
"""

from __future__ import annotations

import logging
import numbers
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction

from sympy import igcd, ilcm, mod_inverse

from seifert.errors import (
    ExceptionalManifoldError,
    InvalidSeifertDataError,
    NotPeriodicBundleError,
    SeifertInvariantFailure,
    UnitError,
)

logger = logging.getLogger(__name__)

# Multiplicities whose unit group mod alpha is {+1, -1} only.
SMALL_UNIT_GROUP_ALPHAS = frozenset({2, 3, 4, 6})


def check_integer(value, what: str) -> int:
    """Accept int-like values (numpy ints included) but never bools, floats or strings."""
    if isinstance(value, bool) or not isinstance(value, numbers.Integral):
        raise InvalidSeifertDataError(f"{what} must be an integer, got {value!r}")
    return int(value)


class Parity(Enum):
    EVEN = "even"
    ODD = "odd"


class Geometry(Enum):
    """Sign of the orbifold Euler characteristic of the base."""
    SPHERICAL = "spherical"
    EUCLIDEAN = "euclidean"
    HYPERBOLIC = "hyperbolic"


@dataclass(frozen=True)
class SeifertData:
    """
    Classical invariants (g, s, b; beta_1/alpha_1, ..., beta_m/alpha_m).

    The obstruction b is present exactly when the manifold is closed (s = 0).
    Fiber invariants are stored as (alpha, beta) pairs in lexicographic order;
    every pair must already be normalized with 0 < beta < alpha and
    gcd(alpha, beta) = 1. Nothing is silently repaired.
    """

    genus: int
    boundary_count: int
    obstruction: int | None = None
    fiber_invariants: tuple = field(default=())

    def __post_init__(self):
        for name in ("genus", "boundary_count"):
            value = getattr(self, name)
            if not isinstance(value, int) or isinstance(value, bool) or value < 0:
                raise InvalidSeifertDataError(f"{name} must be a non-negative integer, got {value!r}")

        if self.boundary_count == 0 and self.obstruction is None:
            raise InvalidSeifertDataError("obstruction b is required when s = 0")
        if self.boundary_count > 0 and self.obstruction is not None:
            raise InvalidSeifertDataError("obstruction b must be absent when s > 0")
        if self.obstruction is not None and (
            not isinstance(self.obstruction, int) or isinstance(self.obstruction, bool)
        ):
            raise InvalidSeifertDataError(f"obstruction must be an integer, got {self.obstruction!r}")

        pairs = []
        for pair in self.fiber_invariants:
            try:
                alpha, beta = pair
            except (TypeError, ValueError):
                raise InvalidSeifertDataError(f"fiber invariant {pair!r} is not an (alpha, beta) pair")
            alpha = check_integer(alpha, "fiber multiplicity alpha")
            beta = check_integer(beta, "fiber invariant beta")
            if alpha < 2:
                raise InvalidSeifertDataError(f"fiber multiplicity must be >= 2, got {beta}/{alpha}")
            if not 0 < beta < alpha:
                raise InvalidSeifertDataError(f"fiber invariant {beta}/{alpha} is not normalized (need 0 < beta < alpha)")
            if igcd(alpha, beta) != 1:
                raise InvalidSeifertDataError(f"fiber invariant {beta}/{alpha} has gcd(alpha, beta) != 1")
            pairs.append((alpha, beta))
        object.__setattr__(self, "fiber_invariants", tuple(sorted(pairs)))

    @property
    def fiber_count(self) -> int:
        return len(self.fiber_invariants)

    @property
    def is_closed(self) -> bool:
        return self.boundary_count == 0

    @property
    def alphas(self) -> tuple:
        return tuple(alpha for alpha, _ in self.fiber_invariants)

    @property
    def monodromy_order(self) -> int:
        """lambda = lcm of the multiplicities (1 without exceptional fibers)."""
        order = 1
        for alpha in self.alphas:
            order = int(ilcm(order, alpha))
        return order

    def sort_key(self) -> tuple:
        return (self.genus, self.boundary_count, self.fiber_invariants,
                0 if self.obstruction is None else self.obstruction)

    def to_dict(self) -> dict:
        return {
            "genus": self.genus,
            "boundary_count": self.boundary_count,
            "obstruction": self.obstruction,
            "fiber_invariants": [f"{beta}/{alpha}" for alpha, beta in self.fiber_invariants],
            "text": str(self),
        }

    def __str__(self) -> str:
        head = f"SFS(g={self.genus}, s={self.boundary_count}"
        if self.obstruction is not None:
            head += f", b={self.obstruction}"
        fibers = ", ".join(f"{beta}/{alpha}" for alpha, beta in self.fiber_invariants)
        return f"{head}; {fibers})" if fibers else f"{head};)"


@dataclass(frozen=True)
class Classification:
    euler_number: Fraction | None
    orbifold_chi: Fraction
    lam: int
    parity: Parity
    geometry: Geometry
    is_periodic_bundle: bool
    fiber_genus: int | None = None
    fiber_boundary_circles: int | None = None
    minimal_torsion_free_index: int | None = None

    def to_dict(self) -> dict:
        return {
            "euler_number": None if self.euler_number is None else str(self.euler_number),
            "orbifold_chi": str(self.orbifold_chi),
            "lambda": self.lam,
            "parity": self.parity.value,
            "geometry": self.geometry.value,
            "is_periodic_bundle": self.is_periodic_bundle,
            "fiber_genus": self.fiber_genus,
            "fiber_boundary_circles": self.fiber_boundary_circles,
            "minimal_torsion_free_index": self.minimal_torsion_free_index,
        }


def euler_number(M: SeifertData) -> Fraction | None:
    """Rational Euler number e = -(b + sum beta_i/alpha_i); None for bounded manifolds."""
    if not M.is_closed:
        return None
    return -(M.obstruction + sum(Fraction(beta, alpha) for alpha, beta in M.fiber_invariants))


def orbifold_euler_characteristic(M: SeifertData) -> Fraction:
    chi = Fraction(2 - 2 * M.genus - M.boundary_count)
    for alpha in M.alphas:
        chi += Fraction(1, alpha) - 1
    return chi


def is_periodic_bundle(M: SeifertData) -> bool:
    """A surface bundle over the circle with periodic monodromy iff s > 0 or e = 0."""
    return not M.is_closed or euler_number(M) == 0


def require_periodic_bundle(M: SeifertData, operation: str):
    if not is_periodic_bundle(M):
        raise NotPeriodicBundleError(
            f"{operation} needs s > 0 or e = 0; {M} has e = {euler_number(M)}"
        )


def _parity(M: SeifertData, lam: int) -> Parity:
    if not M.is_closed or lam % 2:
        return Parity.EVEN
    odd_quotients = sum(1 for alpha in M.alphas if (lam // alpha) % 2 == 1)
    return Parity.ODD if odd_quotients % 2 == 1 else Parity.EVEN


def _fiber_boundary_circles(M: SeifertData, lam: int) -> int:
    # Distinguished torus: gcd(lambda, sum (lambda/alpha_i) beta_i) circles; every
    # further boundary torus meets the fiber in lambda parallel copies.
    if M.is_closed:
        return 0
    twist = sum((lam // alpha) * beta for alpha, beta in M.fiber_invariants)
    return int(igcd(lam, twist)) + (M.boundary_count - 1) * lam


def classify(M: SeifertData) -> Classification:
    """
    Compute e, chi^orb, lambda, parity, base geometry and the bundle data.

    For periodic bundles the fiber genus comes from chi(F) = lambda * chi^orb(B)
    with chi(F) = 2 - 2 g_F - (number of boundary circles of F).
    """
    e = euler_number(M)
    chi = orbifold_euler_characteristic(M)
    lam = M.monodromy_order
    parity = _parity(M, lam)

    if chi > 0:
        geometry = Geometry.SPHERICAL
    elif chi == 0:
        geometry = Geometry.EUCLIDEAN
    else:
        geometry = Geometry.HYPERBOLIC

    bundle = is_periodic_bundle(M)
    fiber_genus = None
    circles = None
    if bundle:
        fiber_chi = lam * chi
        if fiber_chi.denominator != 1:
            raise SeifertInvariantFailure(f"lambda * chi^orb = {fiber_chi} is not an integer for {M}")
        circles = _fiber_boundary_circles(M, lam)
        twice_genus = 2 - circles - int(fiber_chi)
        if twice_genus < 0 or twice_genus % 2:
            raise SeifertInvariantFailure(
                f"Riemann-Hurwitz gives non-integral fiber genus for {M}: chi(F) = {fiber_chi}, {circles} circles"
            )
        fiber_genus = twice_genus // 2

    torsion_free_index = None
    if chi <= 0:
        torsion_free_index = lam * (2 if parity is Parity.ODD else 1)

    return Classification(
        euler_number=e,
        orbifold_chi=chi,
        lam=lam,
        parity=parity,
        geometry=geometry,
        is_periodic_bundle=bundle,
        fiber_genus=fiber_genus,
        fiber_boundary_circles=circles,
        minimal_torsion_free_index=torsion_free_index,
    )


def reverse_orientation(M: SeifertData) -> SeifertData:
    """Fiber invariants beta/alpha -> (alpha - beta)/alpha, obstruction b -> -b - m."""
    obstruction = None if M.obstruction is None else -M.obstruction - M.fiber_count
    return SeifertData(
        genus=M.genus,
        boundary_count=M.boundary_count,
        obstruction=obstruction,
        fiber_invariants=tuple((alpha, alpha - beta) for alpha, beta in M.fiber_invariants),
    )


def unoriented_representative(M: SeifertData) -> SeifertData:
    """Lexicographically least of M and its orientation reversal."""
    return min(M, reverse_orientation(M), key=SeifertData.sort_key)


def power_monodromy(M: SeifertData, k: int) -> SeifertData:
    """
    Invariants of M_{phi^k} from those of M = M_phi.

    Each beta_i becomes the unique beta*_i in (0, alpha_i) with
    k * beta*_i = beta_i mod alpha_i; a closed result again has e = 0.
    """
    require_periodic_bundle(M, "power_monodromy")
    lam = M.monodromy_order
    if igcd(k, lam) != 1:
        raise UnitError(f"k = {k} is not prime to the monodromy order {lam}")

    fibers = tuple(
        (alpha, (beta * mod_inverse(k % alpha, alpha)) % alpha)
        for alpha, beta in M.fiber_invariants
    )
    obstruction = None
    if M.is_closed:
        total = sum(Fraction(beta, alpha) for alpha, beta in fibers)
        if total.denominator != 1:
            raise SeifertInvariantFailure(
                f"power_monodromy({M}, {k}) produced a non-integral obstruction {-total}"
            )
        obstruction = -int(total)
    return SeifertData(M.genus, M.boundary_count, obstruction, fibers)


def is_exceptional_fibering(M: SeifertData) -> bool:
    """S^2 x S^1, B^2 x S^1 and S^1 x S^1 x I: the non-unique fiberings."""
    if M.genus != 0:
        return False
    m = M.fiber_count
    if M.boundary_count == 0:
        if m == 0:
            return M.obstruction == 0
        if m == 2 and M.obstruction == -1:
            (a1, b1), (a2, b2) = M.fiber_invariants
            return a1 == a2 and b1 + b2 == a1
        return False
    if M.boundary_count == 1:
        return m <= 1
    return M.boundary_count == 2 and m == 0


def is_homeomorphic(M: SeifertData, N: SeifertData, oriented: bool = False) -> bool:
    """
    Homeomorphism test by comparison of classical invariants.

    The oriented test compares (g, s, b) and the canonical fiber lists; the
    unoriented test also accepts the orientation reversal of N.
    """
    for candidate in (M, N):
        if is_exceptional_fibering(candidate):
            raise ExceptionalManifoldError(
                f"{candidate} has non-unique Seifert fiberings; invariants do not decide homeomorphism"
            )
    if M == N:
        return True
    if oriented:
        return False
    return M == reverse_orientation(N)


def distinguishing_k_guaranteed(M: SeifertData) -> bool:
    """Some alpha_i outside {2, 3, 4, 6}, unique among the alphas, over a hyperbolic base."""
    if orbifold_euler_characteristic(M) >= 0:
        return False
    alphas = M.alphas
    return any(
        alpha not in SMALL_UNIT_GROUP_ALPHAS and alphas.count(alpha) == 1
        for alpha in alphas
    )


def find_distinguishing_k(M: SeifertData) -> int | None:
    """Smallest k in 2..lambda-1 prime to lambda with M_phi and M_{phi^k} not homeomorphic."""
    require_periodic_bundle(M, "find_distinguishing_k")
    if is_exceptional_fibering(M):
        # every power is again S^2 x S^1, B^2 x S^1 or T^2 x I
        return None
    lam = M.monodromy_order
    for k in range(2, lam):
        if igcd(k, lam) != 1:
            continue
        if not is_homeomorphic(M, power_monodromy(M, k)):
            logger.debug("distinguishing power for %s: k = %d", M, k)
            return k
    if distinguishing_k_guaranteed(M):
        raise SeifertInvariantFailure(f"no distinguishing power found for {M} although one must exist")
    return None


# Closed Euclidean manifolds fibering over the circle with torus fiber,
# paired with the order of their monodromy.
EUCLIDEAN_TORUS_BUNDLES = (
    (SeifertData(0, 0, -1, ((2, 1), (4, 1), (4, 1))), 4),
    (SeifertData(0, 0, -1, ((2, 1), (3, 1), (6, 1))), 6),
    (SeifertData(0, 0, -1, ((3, 1), (3, 1), (3, 1))), 3),
    (SeifertData(0, 0, -2, ((2, 1), (2, 1), (2, 1), (2, 1))), 2),
)


if __name__ == "__main__":
    M = SeifertData(0, 0, -1, ((5, 1), (5, 1), (5, 3)))
    print(f"M = {M}")
    print(f"classification: {classify(M).to_dict()}")
    k = find_distinguishing_k(M)
    print(f"distinguishing power: k = {k} -> {power_monodromy(M, k)}")
