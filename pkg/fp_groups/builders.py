"""
Presentation builders: Seifert fibered space groups, their base orbifold groups,
free and surface fiber groups, semidirect products N x| Z and direct products with Z.
"""

from __future__ import annotations

from seifert import SeifertData
from fp_groups.errors import AutomorphismError, PresentationError, UnsupportedWordProblemError
from fp_groups.presentation import PeripheralMark, Presentation
from fp_groups.words import commutator, free_conjugator, free_reduce, inverse, letter_power, surface_relator

_LETTERS = "abcdefgh"


def _base_generators(M: SeifertData, with_boundary: bool) -> tuple:
    names = [f"x{i}" for i in range(1, M.fiber_count + 1)]
    for j in range(1, M.genus + 1):
        names += [f"a{j}", f"b{j}"]
    if with_boundary:
        names += [f"y{j}" for j in range(1, M.boundary_count + 1)]
    return tuple(names)


def _base_product(M: SeifertData, with_boundary: bool) -> tuple:
    """x1 ... xm [a1, b1] ... [ag, bg] (y1 ... ys) over the generator order of _base_generators."""
    m = M.fiber_count
    word = tuple(range(1, m + 1))
    for j in range(M.genus):
        a, b = m + 2 * j + 1, m + 2 * j + 2
        word += commutator((a,), (b,))
    if with_boundary:
        start = m + 2 * M.genus
        word += tuple(range(start + 1, start + M.boundary_count + 1))
    return word


def presentation_closed_sfs(M: SeifertData) -> Presentation:
    """
    < x1..xm, a1,b1..ag,bg, t | t central, x_i^alpha_i t^beta_i,
      x1...xm [a1,b1]...[ag,bg] t^-b >

    The last relator reads x1...xm [a1,b1]...[ag,bg] = t^b, from x0 t^b = 1 at the
    filled boundary; with e = -(b + sum beta_i/alpha_i) the group has infinite
    abelianization exactly when e = 0.
    """
    if not M.is_closed:
        raise PresentationError(f"presentation_closed_sfs needs s = 0, got {M}")
    base = _base_generators(M, with_boundary=False)
    t = len(base) + 1

    relators = [commutator((i,), (t,)) for i in range(1, t)]
    for i, (alpha, beta) in enumerate(M.fiber_invariants, start=1):
        relators.append(letter_power(i, alpha) + letter_power(t, beta))
    relators.append(_base_product(M, with_boundary=False) + letter_power(t, -M.obstruction))
    return Presentation(base + ("t",), tuple(relators))


def presentation_bounded_sfs(M: SeifertData) -> Presentation:
    """
    < x1..xm, a1,b1..ag,bg, y1..ys, t | t central, x_i^alpha_i t^beta_i,
      x1...xm [a1,b1]...[ag,bg] y1...ys >, with peripheral marks {y_j, t}.
    """
    if M.is_closed:
        raise PresentationError(f"presentation_bounded_sfs needs s > 0, got {M}")
    base = _base_generators(M, with_boundary=True)
    t = len(base) + 1

    relators = [commutator((i,), (t,)) for i in range(1, t)]
    for i, (alpha, beta) in enumerate(M.fiber_invariants, start=1):
        relators.append(letter_power(i, alpha) + letter_power(t, beta))
    relators.append(_base_product(M, with_boundary=True))

    first_y = M.fiber_count + 2 * M.genus + 1
    marks = tuple(
        PeripheralMark(f"boundary {j}", ((first_y + j - 1,), (t,)))
        for j in range(1, M.boundary_count + 1)
    )
    return Presentation(base + ("t",), tuple(relators), marks)


def presentation_sfs(M: SeifertData) -> Presentation:
    return presentation_closed_sfs(M) if M.is_closed else presentation_bounded_sfs(M)


def presentation_orbifold_group(M: SeifertData) -> Presentation:
    """The base orbifold group: the SFS group modulo the central fiber t."""
    base = _base_generators(M, with_boundary=True)
    relators = [letter_power(i, alpha) for i, (alpha, _) in enumerate(M.fiber_invariants, start=1)]
    relators.append(_base_product(M, with_boundary=True))

    first_y = M.fiber_count + 2 * M.genus + 1
    marks = tuple(
        PeripheralMark(f"boundary {j}", ((first_y + j - 1,),), product_with_center=False)
        for j in range(1, M.boundary_count + 1)
    )
    return Presentation(base, tuple(relators), marks)


def free_group(rank: int, names=None) -> Presentation:
    if rank < 0:
        raise PresentationError(f"rank must be non-negative, got {rank}")
    if names is None:
        names = tuple(_LETTERS[:rank]) if rank <= len(_LETTERS) else tuple(f"f{i}" for i in range(1, rank + 1))
    return Presentation(tuple(names), ())


def surface_group(genus: int) -> Presentation:
    """< a1, b1, ..., ag, bg | [a1,b1]...[ag,bg] >"""
    if genus < 1:
        raise PresentationError(f"surface genus must be >= 1, got {genus}")
    names = []
    for j in range(1, genus + 1):
        names += [f"a{j}", f"b{j}"]
    return Presentation(tuple(names), (surface_relator(genus),))


def _mapping_torus_mark(mark: PeripheralMark, psi, t: int) -> PeripheralMark:
    """
    Boundary words d with psi(d) = w d w^-1 give the peripheral subgroup
    < d, w^-1 t > of the mapping torus.
    """
    first = mark.words[0]
    w = free_conjugator(psi.apply(first), first)
    if w is None:
        raise AutomorphismError(f"automorphism does not preserve the conjugacy class of {first}")
    for d in mark.words[1:]:
        if free_reduce(psi.apply(d)) != free_reduce(w + d + inverse(w)):
            raise AutomorphismError(f"mark {mark.name!r} is not carried to a conjugate of itself")
    return PeripheralMark(mark.name, mark.words + (inverse(w) + (t,),), product_with_center=True)


def build_semidirect(N: Presentation, psi, name: str = "t") -> Presentation:
    """N x|_psi Z = < N, t | relators of N, t x t^-1 psi(x)^-1 >."""
    if len(psi.images) != N.generator_count:
        raise AutomorphismError(
            f"automorphism has {len(psi.images)} images for {N.generator_count} generators"
        )
    for image in psi.images:
        N.check_word(image)

    t = N.generator_count + 1
    relators = list(N.relators)
    for x, image in enumerate(psi.images, start=1):
        relators.append((t, x, -t) + inverse(image))

    marks = []
    for mark in N.peripheral_marks:
        if N.relators:
            raise UnsupportedWordProblemError("peripheral marks of a mapping torus need a free fiber group")
        marks.append(_mapping_torus_mark(mark, psi, t))
    return Presentation(N.generator_names + (name,), tuple(relators), tuple(marks))


mapping_torus = build_semidirect


def direct_with_Z(G: Presentation, name: str = "s") -> Presentation:
    """G x Z: a new generator commuting with everything; flagged marks gain it too."""
    s = G.generator_count + 1
    relators = G.relators + tuple(commutator((s,), (x,)) for x in range(1, s))
    marks = tuple(
        PeripheralMark(mark.name, mark.words + ((s,),), mark.product_with_center)
        if mark.product_with_center else mark
        for mark in G.peripheral_marks
    )
    return Presentation(G.generator_names + (name,), relators, marks)
