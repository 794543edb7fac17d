"""
Families of Seifert fibered spaces: quadratic-residue manifolds rigid under every
monodromy power, the torus-knot-complement families C(alpha1, alpha2) and the Lens
spaces they embed in.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product

from sympy import igcd, isprime, mod_inverse, totient

from seifert.errors import SeifertError, SeifertInvariantFailure
from seifert.invariants import (
    SeifertData,
    classify,
    is_exceptional_fibering,
    power_monodromy,
    unoriented_representative,
)


@dataclass(frozen=True)
class LensInvariants:
    """
    L(p, q) containing a member of C(alpha1, alpha2) as a torus knot complement.

    gamma1 and delta1 are the Bezout witnesses alpha1*gamma1 - beta1*delta1 = 1
    used by q = -(gamma1*alpha2 + delta1*alpha2*b) mod p. The formula is kept
    with alpha2 in both terms (q_as_stated) and is not reconciled with L(p, q) tables.
    """

    p: int
    q: int
    gamma1: int
    delta1: int
    q_as_stated: bool = True

    def to_dict(self) -> dict:
        return {"p": self.p, "q": self.q, "gamma1": self.gamma1,
                "delta1": self.delta1, "q_as_stated": self.q_as_stated}


def residue_family(p: int) -> SeifertData:
    """Closed SFS over S^2 with fiber invariants beta/p, beta a nonzero square mod p."""
    if not isprime(p) or p < 7:
        raise SeifertError(f"residue_family needs a prime p >= 7, got {p}")

    residues = sorted({(x * x) % p for x in range(1, p)})
    total = Fraction(sum(residues), p)
    if total.denominator != 1:
        raise SeifertInvariantFailure(f"sum of quadratic residues mod {p} is not divisible by {p}")

    M = SeifertData(0, 0, -int(total), tuple((p, beta) for beta in residues))
    if classify(M).euler_number != 0:
        raise SeifertInvariantFailure(f"residue family member {M} has e != 0")
    return M


def family_enumerate(alpha1: int, alpha2: int) -> list:
    """
    Unoriented classes of C(alpha1, alpha2): SFS over the disk with two exceptional
    fibers of multiplicities alpha1, alpha2. Returns the lexicographically least
    representative of each class; there are totient(alpha1 * alpha2) / 2 of them.
    """
    if alpha1 < 2 or alpha2 < 2:
        raise SeifertError(f"multiplicities must be >= 2, got ({alpha1}, {alpha2})")
    if igcd(alpha1, alpha2) != 1:
        raise SeifertError(f"C({alpha1}, {alpha2}) needs coprime multiplicities")

    betas1 = [b for b in range(1, alpha1) if igcd(alpha1, b) == 1]
    betas2 = [b for b in range(1, alpha2) if igcd(alpha2, b) == 1]
    classes = {
        unoriented_representative(SeifertData(0, 1, None, ((alpha1, b1), (alpha2, b2))))
        for b1, b2 in product(betas1, betas2)
    }
    members = sorted(classes, key=SeifertData.sort_key)

    expected = int(totient(alpha1 * alpha2)) // 2
    if len(members) != expected:
        raise SeifertInvariantFailure(
            f"C({alpha1}, {alpha2}) has {len(members)} classes, expected {expected}"
        )
    return members


def power_orbit(M: SeifertData) -> list:
    """Distinct unoriented classes among the M_{phi^k}, k a unit mod lambda."""
    if is_exceptional_fibering(M):
        return [unoriented_representative(M)]
    lam = M.monodromy_order
    seen = {
        unoriented_representative(power_monodromy(M, k))
        for k in range(1, lam + 1)
        if igcd(k, lam) == 1
    }
    return sorted(seen, key=SeifertData.sort_key)


def _bezout_witnesses(alpha1: int, beta1: int) -> tuple:
    # smallest gamma1 >= 1 with alpha1*gamma1 = 1 mod beta1; delta1 >= 0 follows
    gamma1 = 1 if beta1 == 1 else mod_inverse(alpha1 % beta1, beta1)
    delta1 = (alpha1 * gamma1 - 1) // beta1
    return gamma1, delta1


def lens_invariants(M: SeifertData, b: int) -> LensInvariants:
    """
    Lens space L(p, q) obtained by filling the boundary of M in C(alpha1, alpha2)
    with obstruction b.

    Args:
        M: SFS over the disk with exactly two exceptional fibers
        b: obstruction of the ambient closed manifold

    Returns:
        LensInvariants with q reduced to 0 <= q < p (q = 0 when p <= 1)
    """
    if M.boundary_count != 1 or M.fiber_count != 2 or M.genus != 0:
        raise SeifertError(f"lens_invariants needs g = 0, s = 1 and two fibers, got {M}")

    (alpha1, beta1), (alpha2, beta2) = M.fiber_invariants
    gamma1, delta1 = _bezout_witnesses(alpha1, beta1)

    p = abs(alpha1 * beta2 + alpha2 * beta1 + b * alpha1 * alpha2)
    q = 0 if p <= 1 else (-(gamma1 * alpha2 + delta1 * alpha2 * b)) % p
    return LensInvariants(p=p, q=q, gamma1=int(gamma1), delta1=int(delta1))
