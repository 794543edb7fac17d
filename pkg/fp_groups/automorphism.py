"""
Periodic outer automorphisms of fiber groups and the explicit isomorphism
    (N x|_psi Z) x Z  ->  (N x|_psi^k Z) x Z    for k prime to the order of psi,
checked letter by letter through a normal form for the semidirect product.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from functools import cached_property

import numpy as np
from sympy import igcd

try:
    from sympy.core.intfunc import igcdex
except ImportError:  # sympy < 1.13
    from sympy.core.numbers import igcdex

from fp_groups.builders import build_semidirect, direct_with_Z, free_group, surface_group
from fp_groups.errors import AutomorphismError, IsomorphismCheckFailure
from fp_groups.presentation import PeripheralMark, Presentation, abelian_invariants, word_reducer
from fp_groups.words import commutator, inverse, power

logger = logging.getLogger(__name__)


@dataclass(frozen=True, eq=False)
class FreeAutomorphism:
    """
    An automorphism psi of a free, surface or cyclic group N whose n-th power is
    conjugation by the inner witness g: psi^n(x) = g x g^-1 for every generator x.

    Images and inverse images are words over N; both compositions, the relators
    of N and the periodicity are checked on construction.
    """

    domain: Presentation
    images: tuple
    inverse_images: tuple
    order: int
    inner_witness: tuple = ()
    _powers: dict = field(default_factory=dict, init=False, repr=False)

    def __post_init__(self):
        object.__setattr__(self, "images", tuple(tuple(w) for w in self.images))
        object.__setattr__(self, "inverse_images", tuple(tuple(w) for w in self.inverse_images))
        object.__setattr__(self, "inner_witness", tuple(self.inner_witness))

        r = self.domain.generator_count
        if len(self.images) != r or len(self.inverse_images) != r:
            raise AutomorphismError(f"need {r} images and {r} inverse images")
        if self.order < 1:
            raise AutomorphismError(f"order must be positive, got {self.order}")
        for word in self.images + self.inverse_images + (self.inner_witness,):
            self.domain.check_word(word)

        self._powers[0] = tuple((x,) for x in range(1, r + 1))
        self._powers[1] = tuple(self.reduce(w) for w in self.images)
        self._powers[-1] = tuple(self.reduce(w) for w in self.inverse_images)
        self._validate()

    @cached_property
    def reduce(self):
        return word_reducer(self.domain)

    def equal(self, u, v) -> bool:
        return self.reduce(tuple(u) + inverse(v)) == ()

    def _validate(self):
        for x in range(1, self.domain.generator_count + 1):
            if not self.equal(self._substitute(self._powers[-1][x - 1], self._powers[1]), (x,)):
                raise AutomorphismError(f"psi(psi^-1(x{x})) != x{x}")
            if not self.equal(self._substitute(self._powers[1][x - 1], self._powers[-1]), (x,)):
                raise AutomorphismError(f"psi^-1(psi(x{x})) != x{x}")
            if not self.equal(self.apply((x,), self.order), self.inner_witness + (x,) + inverse(self.inner_witness)):
                raise AutomorphismError(
                    f"psi^{self.order} is not conjugation by the inner witness on generator {x}"
                )
        for relator in self.domain.relators:
            if self.reduce(self.apply(relator)) != ():
                raise AutomorphismError(f"psi does not kill relator {self.domain.format_word(relator)}")

    @staticmethod
    def _substitute(word, images) -> tuple:
        result = ()
        for letter in word:
            image = images[abs(letter) - 1]
            result += image if letter > 0 else inverse(image)
        return result

    def power_images(self, exponent: int) -> tuple:
        """Generator images of psi^exponent, reduced."""
        if exponent not in self._powers:
            step = 1 if exponent > 0 else -1
            previous = self.power_images(exponent - step)
            self._powers[exponent] = tuple(
                self.reduce(self._substitute(w, self._powers[step])) for w in previous
            )
        return self._powers[exponent]

    def apply(self, word, exponent: int = 1) -> tuple:
        return self.reduce(self._substitute(word, self.power_images(exponent)))

    def power(self, k: int) -> "FreeAutomorphism":
        """psi^k; if psi fixes g its periodicity witness is g^(k/gcd(n, k))."""
        d = igcd(self.order, k)
        return FreeAutomorphism(
            domain=self.domain,
            images=self.power_images(k),
            inverse_images=self.power_images(-k),
            order=self.order // d,
            inner_witness=self.reduce(power(self.inner_witness, k // d)),
        )


@dataclass(frozen=True)
class BasisChange:
    """Integers with u*n + v*k = 1 re-basing the Z^2 spanned by t and s."""

    k: int
    n: int
    u: int
    v: int

    def __post_init__(self):
        if self.u * self.n + self.v * self.k != 1:
            raise AutomorphismError(f"u*n + v*k = {self.u * self.n + self.v * self.k}, expected 1")

    @property
    def lattice_matrix(self) -> np.ndarray:
        """Rows: t- and s-exponents of tau and sigma."""
        return np.array([[self.k, -self.u], [self.n, self.v]], dtype=np.int64)

    @property
    def image_matrix(self) -> np.ndarray:
        """Rows: tau- and sigma-exponents of f(t) and f(s)."""
        return np.array([[self.v, self.u], [-self.n, self.k]], dtype=np.int64)

    @property
    def determinant(self) -> int:
        return int(round(np.linalg.det(self.lattice_matrix)))


@dataclass(frozen=True, eq=False)
class SemidirectContext:
    """N x|_action Z, optionally times Z, with generators N..., t (and s)."""

    fiber: Presentation
    action: FreeAutomorphism
    with_center: bool = True
    t_name: str = "t"
    s_name: str = "s"

    @cached_property
    def presentation(self) -> Presentation:
        G = build_semidirect(self.fiber, self.action, self.t_name)
        return direct_with_Z(G, self.s_name) if self.with_center else G


def semidirect_normal_form(word, context: SemidirectContext) -> tuple:
    """
    Collect t and s to the right: w = n t^e s^f, returned as (n, e, f) with the
    N-part reduced. The element is trivial iff n is empty and e = f = 0.
    """
    r = context.fiber.generator_count
    t, s = r + 1, r + 2
    n_part = []
    e = f = 0
    for letter in word:
        index = abs(letter)
        if index <= r:
            image = context.action.power_images(e)[index - 1]
            n_part.extend(image if letter > 0 else inverse(image))
        elif index == t:
            e += 1 if letter > 0 else -1
        elif index == s and context.with_center:
            f += 1 if letter > 0 else -1
        else:
            raise AutomorphismError(f"letter {letter} is not a generator of the semidirect product")
    return context.action.reduce(tuple(n_part)), e, f


@dataclass(frozen=True)
class Lemma21Result:
    basis: BasisChange
    source: Presentation
    target: Presentation
    generator_map: tuple
    relators_checked: int
    abelian_invariants: tuple

    def to_dict(self) -> dict:
        return {
            "k": self.basis.k,
            "n": self.basis.n,
            "u": self.basis.u,
            "v": self.basis.v,
            "determinant": self.basis.determinant,
            "map": {
                name: self.target.format_word(image)
                for name, image in zip(self.source.generator_names, self.generator_map)
            },
            "relators_checked": self.relators_checked,
            "abelian_invariants": {"rank": self.abelian_invariants[0],
                                   "torsion": list(self.abelian_invariants[1])},
        }


def _image(word, generator_map) -> tuple:
    result = ()
    for letter in word:
        image = generator_map[abs(letter) - 1]
        result += image if letter > 0 else inverse(image)
    return result


def lemma21_iso(N: Presentation, psi: FreeAutomorphism, k: int) -> Lemma21Result:
    """
    Explicit isomorphism f: (N x|_psi Z) x Z -> (N x|_psi^k Z) x Z.

    f is the identity on N, f(t) = tau^v (g sigma)^u and f(s) = tau^-n (g sigma)^k
    where u*n + v*k = 1 and g is the inner witness of psi. Every relator image is
    reduced to the identity in the target before the result is returned.
    """
    n = psi.order
    if igcd(k, n) != 1:
        raise AutomorphismError(f"k = {k} is not a unit modulo the order {n}")

    # Step 1: Bezout coefficients and the lattice change
    u, v, _ = igcdex(n, k)
    basis = BasisChange(k=k, n=n, u=int(u), v=int(v))
    if basis.determinant != 1 or not np.array_equal(
        basis.image_matrix @ basis.lattice_matrix, np.eye(2, dtype=np.int64)
    ):
        raise IsomorphismCheckFailure(f"basis change {basis} is not unimodular")

    # Step 2: source, target and the generator map
    source_ctx = SemidirectContext(N, psi)
    target_ctx = SemidirectContext(N, psi.power(k), t_name="tau", s_name="sigma")
    source, target = source_ctx.presentation, target_ctx.presentation

    r = N.generator_count
    tau, sigma = r + 1, r + 2
    g_sigma = psi.inner_witness + (sigma,)
    generator_map = tuple((x,) for x in range(1, r + 1)) + (
        power((tau,), basis.v) + power(g_sigma, basis.u),
        power((tau,), -n) + power(g_sigma, k),
    )

    # Step 3: every relator must map to the identity
    for relator in source.relators:
        normal = semidirect_normal_form(_image(relator, generator_map), target_ctx)
        if normal != ((), 0, 0):
            raise IsomorphismCheckFailure(
                f"relator {source.format_word(relator)} maps to {normal}, not the identity"
            )

    invariants = abelian_invariants(source)
    if invariants != abelian_invariants(target):
        raise IsomorphismCheckFailure("abelianizations of source and target differ")

    logger.info("lemma21_iso: n=%d k=%d (u, v)=(%d, %d), %d relators verified",
                n, k, basis.u, basis.v, len(source.relators))
    return Lemma21Result(basis, source, target, generator_map, len(source.relators), invariants)


def _f2_with_boundary() -> Presentation:
    F2 = free_group(2)
    return Presentation(F2.generator_names, (), (PeripheralMark("boundary", (commutator((1,), (2,)),)),))


def _f2_order3() -> FreeAutomorphism:
    # a -> b, b -> (ab)^-1
    return FreeAutomorphism(_f2_with_boundary(), ((2,), (-2, -1)), ((-2, -1), (1,)), 3)


def _f2_identity() -> FreeAutomorphism:
    return FreeAutomorphism(_f2_with_boundary(), ((1,), (2,)), ((1,), (2,)), 1)


def _torus_order4() -> FreeAutomorphism:
    # a -> b, b -> a^-1
    return FreeAutomorphism(surface_group(1), ((2,), (-1,)), ((-2,), (1,)), 4)


def _torus_order6() -> FreeAutomorphism:
    # a -> b, b -> a^-1 b
    return FreeAutomorphism(surface_group(1), ((2,), (-1, 2)), ((1, -2), (1,)), 6)


STANDARD_AUTOMORPHISMS = {
    "f2-order3": _f2_order3,
    "f2-identity": _f2_identity,
    "torus-order4": _torus_order4,
    "torus-order6": _torus_order6,
}
