"""
Finite groups given by multiplication tables, optionally with a marked subgroup,
and isomorphism testing of groups and of group pairs.
"""

from __future__ import annotations

import hashlib
import logging
from collections import Counter
from functools import cached_property

import numpy as np

from quotient_engine.errors import InvalidFiniteGroupError, MissingMarkError

logger = logging.getLogger(__name__)


class FiniteGroup:
    """
    Group on 0..order-1 with identity 0; table[a, b] is the product a*b.

    Args:
        table: square array of element indices
        marked_subgroup: elements of a subgroup carried along (the H of a pair (G, H))
        generators: known generating elements; found greedily when omitted
        validate: check the group axioms (Latin square, identity, Light's associativity test)
    """

    def __init__(self, table, marked_subgroup=None, name: str = "", generators=None, validate: bool = True):
        self.table = np.ascontiguousarray(np.asarray(table, dtype=np.int32))
        self.name = name
        self._given_generators = None if generators is None else tuple(int(g) for g in generators)
        self.marked_subgroup = None if marked_subgroup is None else tuple(sorted({int(h) for h in marked_subgroup}))
        if validate:
            self._validate()

    def _validate(self):
        T = self.table
        if T.ndim != 2 or T.shape[0] != T.shape[1] or T.shape[0] == 0:
            raise InvalidFiniteGroupError(f"table must be a non-empty square array, got shape {T.shape}")
        n = T.shape[0]
        full = np.arange(n)
        if not (np.array_equal(T[0], full) and np.array_equal(T[:, 0], full)):
            raise InvalidFiniteGroupError("element 0 is not the identity")
        if not (np.all(np.sort(T, axis=1) == full) and np.all(np.sort(T, axis=0) == full[:, None])):
            raise InvalidFiniteGroupError("table is not a Latin square")

        # Light's test: (xy)g = x(yg) for all x, y and g in a generating set
        for g in self.generators:
            left = T[:, g][T]
            right = T[:, T[:, g]]
            if not np.array_equal(left, right):
                raise InvalidFiniteGroupError(f"multiplication is not associative (generator {g})")

        if self.marked_subgroup is not None:
            if not self.is_subgroup(self.marked_subgroup):
                raise InvalidFiniteGroupError(f"marked set {self.marked_subgroup} is not a subgroup")

    @property
    def order(self) -> int:
        return int(self.table.shape[0])

    def __len__(self):
        return self.order

    def __repr__(self):
        mark = "" if self.marked_subgroup is None else f", mark of order {len(self.marked_subgroup)}"
        return f"FiniteGroup({self.name or 'order ' + str(self.order)}{mark})"

    def mul(self, a: int, b: int) -> int:
        return int(self.table[a, b])

    @cached_property
    def inverses(self) -> np.ndarray:
        return np.argmin(self.table, axis=1).astype(np.int32)

    @cached_property
    def element_orders(self) -> np.ndarray:
        n = self.order
        orders = np.zeros(n, dtype=np.int64)
        current = np.arange(n)
        for k in range(1, n + 1):
            newly = (current == 0) & (orders == 0)
            orders[newly] = k
            if np.all(orders):
                break
            current = self.table[current, np.arange(n)]
        return orders

    def span(self, elements) -> np.ndarray:
        """Sorted elements of the subgroup generated by `elements`."""
        gens = np.unique(np.asarray(list(elements), dtype=np.int64))
        seen = np.zeros(self.order, dtype=bool)
        seen[0] = True
        frontier = np.array([0])
        while frontier.size and gens.size:
            reached = np.unique(self.table[np.ix_(frontier, gens)].ravel())
            frontier = reached[~seen[reached]]
            seen[frontier] = True
        return np.flatnonzero(seen)

    @cached_property
    def generators(self) -> tuple:
        """Greedy generating set, preferring elements of large order."""
        if self._given_generators is not None:
            return self._given_generators
        candidates = sorted(range(1, self.order), key=lambda e: (-int(self.element_orders[e]), e))
        gens, covered = [], np.zeros(self.order, dtype=bool)
        covered[0] = True
        for e in candidates:
            if covered.all():
                break
            if not covered[e]:
                gens.append(e)
                covered[:] = False
                covered[self.span(gens)] = True
        return tuple(gens)

    def is_subgroup(self, elements) -> bool:
        H = np.asarray(list(elements), dtype=np.int64)
        if H.size == 0 or 0 not in H:
            return False
        member = np.zeros(self.order, dtype=bool)
        member[H] = True
        return bool(np.all(member[self.table[np.ix_(H, H)]]))

    def is_normal(self, elements) -> bool:
        H = np.asarray(list(elements), dtype=np.int64)
        member = np.zeros(self.order, dtype=bool)
        member[H] = True
        for g in self.generators:
            conjugates = self.table[self.table[g, H], self.inverses[g]]
            if not np.all(member[conjugates]):
                return False
        return True

    @cached_property
    def center(self) -> np.ndarray:
        return np.flatnonzero(np.all(self.table == self.table.T, axis=1))

    @cached_property
    def derived_subgroup(self) -> np.ndarray:
        T, inv = self.table, self.inverses
        ab = T
        a_inv_b_inv = T[np.ix_(inv, inv)]
        commutators = np.unique(T[ab, a_inv_b_inv])
        return self.span(commutators)

    @property
    def is_abelian(self) -> bool:
        return bool(np.array_equal(self.table, self.table.T))

    def with_mark(self, marked_subgroup) -> "FiniteGroup":
        marked = FiniteGroup(self.table, marked_subgroup, self.name, self.generators, validate=False)
        if not marked.is_subgroup(marked.marked_subgroup):
            raise InvalidFiniteGroupError(f"marked set {marked.marked_subgroup} is not a subgroup")
        return marked

    def relabel(self, permutation) -> "FiniteGroup":
        """Isomorphic copy with element e renamed permutation[e] (permutation[0] must be 0)."""
        p = np.asarray(permutation, dtype=np.int64)
        if p[0] != 0:
            raise InvalidFiniteGroupError("relabeling must fix the identity")
        table = np.empty_like(self.table)
        table[np.ix_(p, p)] = p[self.table]
        mark = None if self.marked_subgroup is None else p[list(self.marked_subgroup)]
        return FiniteGroup(table, mark, self.name)

    def invariants(self) -> tuple:
        """Isomorphism invariants (of the pair, when marked)."""
        orders = tuple(sorted(Counter(self.element_orders.tolist()).items()))
        base = (self.order, orders, int(self.center.size), int(self.derived_subgroup.size))
        if self.marked_subgroup is None:
            return base
        H = list(self.marked_subgroup)
        mark_orders = tuple(sorted(Counter(self.element_orders[H].tolist()).items()))
        return base + (len(H), mark_orders, self.is_normal(H))

    def fingerprint(self) -> str:
        return hashlib.sha256(repr(self.invariants()).encode()).hexdigest()[:16]


def _extend(A: FiniteGroup, B: FiniteGroup, gens, images):
    """
    Extend g_i -> images[i] to a homomorphism on <gens>. Returns the partial
    element map (-1 outside the span) or None on a conflict or non-injectivity.
    """
    mapping = np.full(A.order, -1, dtype=np.int64)
    used = np.zeros(B.order, dtype=bool)
    mapping[0] = 0
    used[0] = True
    queue = [0]
    for a in queue:
        for g, h in zip(gens, images):
            target = int(A.table[a, g])
            value = int(B.table[mapping[a], h])
            if mapping[target] == -1:
                if used[value]:
                    return None
                mapping[target] = value
                used[value] = True
                queue.append(target)
            elif mapping[target] != value:
                return None
    return mapping


def iter_isomorphisms(A: FiniteGroup, B: FiniteGroup):
    """Yield every isomorphism A -> B as an element map array."""
    if A.order != B.order or A.invariants()[:4] != B.invariants()[:4]:
        return
    gens = A.generators
    candidates = [np.flatnonzero(B.element_orders == A.element_orders[g]).tolist() for g in gens]

    def search(i, images):
        if i == len(gens):
            mapping = _extend(A, B, gens, images)
            if mapping is not None and np.all(mapping >= 0):
                yield mapping
            return
        for c in candidates[i]:
            if c in images:
                continue
            if _extend(A, B, gens[: i + 1], images + [c]) is None:
                continue
            yield from search(i + 1, images + [c])

    yield from search(0, [])


def finite_group_iso(A: FiniteGroup, B: FiniteGroup) -> bool:
    return next(iter_isomorphisms(A, B), None) is not None


def pair_iso(A: FiniteGroup, B: FiniteGroup) -> bool:
    """True iff some isomorphism A -> B carries the mark of A exactly onto the mark of B."""
    if A.marked_subgroup is None or B.marked_subgroup is None:
        raise MissingMarkError("pair_iso needs both groups to carry a marked subgroup")
    if A.invariants() != B.invariants():
        return False
    target = set(B.marked_subgroup)
    H = list(A.marked_subgroup)
    return any(set(mapping[H].tolist()) == target for mapping in iter_isomorphisms(A, B))


def is_homomorphism(A: FiniteGroup, B: FiniteGroup, mapping) -> bool:
    mapping = np.asarray(mapping, dtype=np.int64)
    return bool(np.array_equal(mapping[A.table], B.table[np.ix_(mapping, mapping)]))
