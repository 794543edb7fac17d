"""
Sets of finite quotients (and quotient pairs) up to isomorphism, their comparison,
serialization, and the quotient G/G(n) by the intersection of all normal
subgroups of index at most n.
"""

from __future__ import annotations

import base64
import logging
from dataclasses import dataclass, field

import numpy as np

from fp_groups import Presentation
from quotient_engine.errors import BudgetExceededError, CofinalityFailure, MissingMarkError
from quotient_engine.finite_group import FiniteGroup, finite_group_iso, is_homomorphism, pair_iso
from quotient_engine.low_index import SearchBudget, enumerate_normal_tables, quotient_from_table

logger = logging.getLogger(__name__)


def _same_class(A: FiniteGroup, B: FiniteGroup, paired: bool) -> bool:
    return pair_iso(A, B) if paired else finite_group_iso(A, B)


def _sort_key(group: FiniteGroup) -> tuple:
    return group.order, group.fingerprint()


def deduplicate(groups, paired: bool) -> list:
    """Keep the first representative of each isomorphism class, sorted by (order, fingerprint)."""
    classes = []
    for group in sorted(groups, key=_sort_key):
        key = _sort_key(group)
        if not any(_sort_key(c) == key and _same_class(c, group, paired) for c in classes):
            classes.append(group)
    return classes


@dataclass
class QuotientSet:
    bound: int
    paired: bool
    classes: list = field(default_factory=list)

    def __len__(self):
        return len(self.classes)

    def orders(self) -> list:
        return [group.order for group in self.classes]

    def contains(self, group: FiniteGroup) -> bool:
        key = _sort_key(group)
        return any(_sort_key(c) == key and _same_class(c, group, self.paired) for c in self.classes)


def serialize_group(group: FiniteGroup) -> str:
    """order=<k> fingerprint=<hex> table=<base64 little-endian uint16, row-major> mark=<list|none>"""
    raw = np.ascontiguousarray(group.table, dtype="<u2").tobytes()
    table = base64.b64encode(raw).decode("ascii")
    mark = "none" if group.marked_subgroup is None else ",".join(map(str, group.marked_subgroup))
    return f"order={group.order} fingerprint={group.fingerprint()} table={table} mark={mark}"


def serialize_quotient_set(Q: QuotientSet) -> str:
    return "\n".join(serialize_group(group) for group in Q.classes)


def deserialize_group(line: str) -> FiniteGroup:
    fields = dict(part.split("=", 1) for part in line.split())
    order = int(fields["order"])
    table = np.frombuffer(base64.b64decode(fields["table"]), dtype="<u2").reshape(order, order)
    mark = None if fields["mark"] == "none" else [int(h) for h in fields["mark"].split(",")]
    return FiniteGroup(table.astype(np.int32), mark)


def quotient_set(P: Presentation, n: int, paired: bool = False, budget: SearchBudget = None) -> QuotientSet:
    """Isomorphism classes of quotients of order <= n (pairs with the image of the first mark when paired)."""
    if paired and not P.peripheral_marks:
        raise MissingMarkError("paired quotients need a presentation with a peripheral mark")
    groups = [quotient_from_table(P, table) for table in enumerate_normal_tables(P, n, budget)]
    if not paired:
        groups = [FiniteGroup(g.table, validate=False) for g in groups]
    classes = deduplicate(groups, paired)
    logger.info("quotient_set: %d quotients, %d classes (bound %d, paired=%s)",
                len(groups), len(classes), n, paired)
    return QuotientSet(bound=n, paired=paired, classes=classes)


@dataclass
class Comparison:
    equal: bool
    bound: int
    paired: bool
    first: QuotientSet
    second: QuotientSet
    witness: FiniteGroup | None = None
    witness_side: str | None = None

    def summary(self) -> str:
        kind = "pair quotients" if self.paired else "quotients"
        if self.equal:
            return f"EQUAL (bound {self.bound})"
        return (f"UNEQUAL (bound {self.bound}): {kind} class of order {self.witness.order} "
                f"only in the {self.witness_side} set")


def compare_sets(A: QuotientSet, B: QuotientSet) -> Comparison:
    for group in A.classes:
        if not B.contains(group):
            return Comparison(False, A.bound, A.paired, A, B, group, "first")
    for group in B.classes:
        if not A.contains(group):
            return Comparison(False, A.bound, A.paired, A, B, group, "second")
    return Comparison(True, A.bound, A.paired, A, B)


def compare_quotient_sets(P: Presentation, Q: Presentation, n: int, paired: bool = False,
                          budget: SearchBudget = None) -> Comparison:
    """Equal, or a witness class present in exactly one of the two quotient sets."""
    return compare_sets(quotient_set(P, n, paired, budget), quotient_set(Q, n, paired, budget))


@dataclass
class GnData:
    """
    G/G(n) as the image of G acting on the cosets of all normal subgroups of
    index <= n at once.
    """

    n: int
    quotient: FiniteGroup
    generator_images: dict
    factors: list
    projections: list

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "order": self.quotient.order,
            "factor_orders": [f.order for f in self.factors],
            "generator_images": dict(self.generator_images),
            "mark_order": None if self.quotient.marked_subgroup is None else len(self.quotient.marked_subgroup),
        }


def _evaluate(group: FiniteGroup, word, images) -> int:
    element = 0
    for letter in word:
        g = images[abs(letter) - 1]
        element = group.mul(element, g if letter > 0 else int(group.inverses[g]))
    return element


def g_n(P: Presentation, n: int, budget: SearchBudget = None) -> GnData:
    """
    Realize G/G(n) and check it: every quotient of index <= n is a homomorphic
    image of it (marks onto marks for pairs), and the kernels of these
    projections meet trivially.
    """
    budget = budget or SearchBudget()
    tables = enumerate_normal_tables(P, n, budget)
    factors = [quotient_from_table(P, table) for table in tables]

    # Step 1: joint permutation action on the disjoint union of all coset sets
    offsets = np.cumsum([0] + [t.index for t in tables])
    degree = int(offsets[-1])
    arrays = [t.as_array() for t in tables]
    generator_perms = []
    for i in range(P.generator_count):
        perm = np.concatenate([arr[:, 2 * i] + off for arr, off in zip(arrays, offsets[:-1])])
        generator_perms.append(perm.astype(np.int32))

    # Step 2: closure under right multiplication by generators
    identity = np.arange(degree, dtype=np.int32)
    index = {identity.tobytes(): 0}
    elements = [identity]
    right = [[] for _ in generator_perms]
    for e in elements:
        for j, g in enumerate(generator_perms):
            product = g[e]
            key = product.tobytes()
            if key not in index:
                if len(elements) >= budget.max_order:
                    raise BudgetExceededError(f"G/G({n}) has more than {budget.max_order} elements")
                index[key] = len(elements)
                elements.append(product)
            right[j].append(index[key])
    order = len(elements)
    right = np.array(right, dtype=np.int64).reshape(len(generator_perms), order)

    # Step 3: multiplication table, column b traces the BFS word of b
    words = [None] * order
    words[0] = ()
    for a in range(order):
        for j in range(len(generator_perms)):
            b = int(right[j, a])
            if words[b] is None:
                words[b] = words[a] + (j,)
    table = np.empty((order, order), dtype=np.int32)
    for b, word in enumerate(words):
        current = np.arange(order)
        for j in word:
            current = right[j, current]
        table[:, b] = current

    generators = [int(right[j, 0]) for j in range(len(generator_perms))]
    quotient = FiniteGroup(table, generators=[g for g in dict.fromkeys(generators) if g != 0])
    if P.peripheral_marks:
        mark = [_evaluate(quotient, word, generators) for word in P.peripheral_marks[0].words]
        quotient = quotient.with_mark(quotient.span(mark))

    # Step 4: projections onto each factor, the image of coset 0 in its block
    projections = [np.array([int(e[off]) - off for e in elements], dtype=np.int64) for off in offsets[:-1]]
    data = GnData(
        n=n,
        quotient=quotient,
        generator_images=dict(zip(P.generator_names, generators)),
        factors=factors,
        projections=projections,
    )
    verify_cofinality(data)
    logger.info("G/G(%d) has order %d over %d normal subgroups", n, order, len(tables))
    return data


def verify_cofinality(data: GnData) -> None:
    """Raise CofinalityFailure unless every factor is a surjective image of G/G(n) with trivial joint kernel."""
    kernel = np.ones(data.quotient.order, dtype=bool)
    for factor, projection in zip(data.factors, data.projections):
        if not is_homomorphism(data.quotient, factor, projection):
            raise CofinalityFailure(f"projection onto a quotient of order {factor.order} is not a homomorphism")
        if np.unique(projection).size != factor.order:
            raise CofinalityFailure(f"projection onto a quotient of order {factor.order} is not onto")
        if data.quotient.marked_subgroup is not None:
            image = set(projection[list(data.quotient.marked_subgroup)].tolist())
            if image != set(factor.marked_subgroup):
                raise CofinalityFailure("projection does not carry the mark onto the mark")
        kernel &= projection == 0
    if np.count_nonzero(kernel) != 1:
        raise CofinalityFailure("normal subgroups of bounded index do not intersect trivially")
