"""
Low-index normal subgroups of a finitely presented group.

Coset tables are filled by exhaustive backtracking in the manner of Sims'
low-index algorithm. After every definition the table is closed under relator
scanning and under regularity: a table belongs to a normal subgroup exactly when,
for every coset c, the map sending coset 0 to c extends to an automorphism of the
table. Both closures deduce missing entries and prune contradictory branches.
"""

import logging
import os
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

import numpy as np

sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.abspath(__file__))))
from config import MAX_GN_ORDER, MAX_SEARCH_NODES, SEARCH_WORKERS

from fp_groups import Presentation
from quotient_engine.errors import BudgetExceededError
from quotient_engine.finite_group import FiniteGroup

logger = logging.getLogger(__name__)

UNDEFINED = -1


@dataclass(frozen=True)
class SearchBudget:
    max_nodes: int = MAX_SEARCH_NODES
    max_order: int = MAX_GN_ORDER
    workers: int = SEARCH_WORKERS


def relator_columns(word) -> tuple:
    """Signed generator indices -> table columns (2i for x_i, 2i + 1 for its inverse, 0-based i)."""
    return tuple(2 * (abs(l) - 1) + (0 if l > 0 else 1) for l in word)


class CosetTable:
    """A complete coset table in standard form: rows are cosets, columns generators and inverses."""

    def __init__(self, rows, generator_count: int):
        self.rows = tuple(tuple(int(c) for c in row) for row in rows)
        self.generator_count = generator_count

    @property
    def index(self) -> int:
        return len(self.rows)

    @property
    def is_complete(self) -> bool:
        return all(c != UNDEFINED for row in self.rows for c in row)

    def __eq__(self, other):
        return isinstance(other, CosetTable) and self.rows == other.rows

    def __hash__(self):
        return hash(self.rows)

    def __repr__(self):
        return f"CosetTable(index={self.index})"

    def as_array(self) -> np.ndarray:
        return np.array(self.rows, dtype=np.int64).reshape(self.index, 2 * self.generator_count)

    def trace(self, coset: int, word) -> int:
        for col in relator_columns(word):
            coset = self.rows[coset][col]
        return coset

    def transversal(self) -> list:
        """Column words reaching each coset from coset 0 along a breadth-first tree."""
        words = [None] * self.index
        words[0] = ()
        queue = [0]
        for a in queue:
            for col, b in enumerate(self.rows[a]):
                if words[b] is None:
                    words[b] = words[a] + (col,)
                    queue.append(b)
        return words

    def is_normal(self) -> bool:
        return _regularity_closure([list(r) for r in self.rows]) is not None


def _define(table, a, col, b) -> int:
    """Set a.col = b and b.col^-1 = a. Returns 1 if new, 0 if already so, -1 on conflict."""
    current, back = table[a][col], table[b][col ^ 1]
    if current == b and back == a:
        return 0
    if (current != UNDEFINED and current != b) or (back != UNDEFINED and back != a):
        return -1
    table[a][col] = b
    table[b][col ^ 1] = a
    return 1


def _scan_relators(table, relators):
    """One pass of relator scanning from every coset. None on conflict, else whether anything was deduced."""
    changed = False
    for a in range(len(table)):
        for word in relators:
            length = len(word)
            f, i = a, 0
            while i < length and table[f][word[i]] != UNDEFINED:
                f = table[f][word[i]]
                i += 1
            if i == length:
                if f != a:
                    return None
                continue
            b, j = a, length - 1
            while j >= i and table[b][word[j] ^ 1] != UNDEFINED:
                b = table[b][word[j] ^ 1]
                j -= 1
            if j < i:
                if f != b:
                    return None
            elif j == i:
                if _define(table, f, word[i], b) < 0:
                    return None
                changed = True
    return changed


def _regularity_closure(table):
    """
    For every coset c build the partial map 0 -> c along defined edges.
    Returns None on conflict, else whether anything was deduced.
    """
    k = len(table)
    ncols = len(table[0])
    changed = False
    for c in range(1, k):
        phi = [UNDEFINED] * k
        psi = [UNDEFINED] * k
        phi[0], psi[c] = c, 0
        queue = [0]
        for a in queue:
            image = phi[a]
            for col in range(ncols):
                b, d = table[a][col], table[image][col]
                if b == UNDEFINED and d == UNDEFINED:
                    continue
                if b == UNDEFINED:
                    if psi[d] != UNDEFINED:
                        if _define(table, a, col, psi[d]) < 0:
                            return None
                        changed = True
                    continue
                if d == UNDEFINED:
                    if phi[b] != UNDEFINED:
                        if _define(table, image, col, phi[b]) < 0:
                            return None
                        changed = True
                    continue
                if phi[b] == UNDEFINED:
                    if psi[d] != UNDEFINED:
                        return None
                    phi[b], psi[d] = d, b
                    queue.append(b)
                elif phi[b] != d:
                    return None
    return changed


def _close(table, relators) -> bool:
    while True:
        scanned = _scan_relators(table, relators)
        if scanned is None:
            return False
        regular = _regularity_closure(table)
        if regular is None:
            return False
        if not scanned and not regular:
            return True


def _first_gap(table):
    for a, row in enumerate(table):
        for col, entry in enumerate(row):
            if entry == UNDEFINED:
                return a, col
    return None


def _standardize(table) -> tuple:
    """Relabel cosets in order of first appearance scanning rows left to right."""
    label = {0: 0}
    order = [0]
    for a in order:
        for b in table[a]:
            if b not in label:
                label[b] = len(order)
                order.append(b)
    return tuple(tuple(label[b] for b in table[a]) for a in order)


def _children(table, relators, max_index):
    a, col = _first_gap(table)
    k = len(table)
    options = [b for b in range(k) if table[b][col ^ 1] == UNDEFINED]
    if k < max_index:
        options.append(k)
    children = []
    for b in options:
        child = [row[:] for row in table]
        if b == k:
            child.append([UNDEFINED] * len(table[0]))
        _define(child, a, col, b)
        if _close(child, relators):
            children.append(child)
    return children


def _search(states, relators, max_index, max_nodes):
    """Depth-first search below the given states; returns (standardized complete tables, nodes visited)."""
    found = set()
    stack = list(reversed(states))
    nodes = 0
    while stack:
        table = stack.pop()
        nodes += 1
        if nodes > max_nodes:
            raise BudgetExceededError(
                f"low-index search exceeded {max_nodes} nodes at index bound {max_index}"
            )
        if _first_gap(table) is None:
            found.add(_standardize(table))
            continue
        stack.extend(reversed(_children(table, relators, max_index)))
    return found, nodes


def _search_worker(args):
    return _search(*args)


def enumerate_normal_tables(P: Presentation, max_index: int, budget: SearchBudget = None) -> list:
    """
    Coset tables of all normal subgroups of index <= max_index, each exactly once,
    sorted by (index, rows).
    """
    budget = budget or SearchBudget()
    if max_index < 1:
        raise ValueError(f"index bound must be >= 1, got {max_index}")

    ncols = 2 * P.generator_count
    relators = [relator_columns(r) for r in P.relators if r]
    if ncols == 0:
        return [CosetTable([()], 0)]

    root = [[UNDEFINED] * ncols]
    if not _close(root, relators):
        raise BudgetExceededError("trivial coset table is inconsistent")

    if budget.workers > 1:
        # breadth-first until there is enough independent work to hand out
        frontier, found, nodes = [root], set(), 0
        while frontier and len(frontier) < 4 * budget.workers:
            next_frontier = []
            for table in frontier:
                nodes += 1
                if nodes > budget.max_nodes:
                    raise BudgetExceededError(
                        f"low-index search exceeded {budget.max_nodes} nodes at index bound {max_index}"
                    )
                if _first_gap(table) is None:
                    found.add(_standardize(table))
                else:
                    next_frontier.extend(_children(table, relators, max_index))
            frontier = next_frontier
        chunks = [frontier[i::budget.workers] for i in range(budget.workers)]
        remaining = budget.max_nodes - nodes
        jobs = [(chunk, relators, max_index, remaining) for chunk in chunks if chunk]
        with ProcessPoolExecutor(max_workers=budget.workers) as pool:
            for part, part_nodes in pool.map(_search_worker, jobs):
                found |= part
                nodes += part_nodes
        if nodes > budget.max_nodes:
            raise BudgetExceededError(f"low-index search exceeded {budget.max_nodes} nodes")
    else:
        found, nodes = _search([root], relators, max_index, budget.max_nodes)

    tables = sorted(found, key=lambda rows: (len(rows), rows))
    logger.info("index <= %d: %d normal subgroups, %d nodes", max_index, len(tables), nodes)
    return [CosetTable(rows, P.generator_count) for rows in tables]


def mark_elements(P: Presentation, table: CosetTable) -> list:
    """Cosets of the generators of the first peripheral mark."""
    if not P.peripheral_marks:
        return []
    return [table.trace(0, word) for word in P.peripheral_marks[0].words]


def quotient_from_table(P: Presentation, table: CosetTable) -> FiniteGroup:
    """G/K acting regularly on the cosets of K; the element c is the coset reached from 0."""
    k = table.index
    tab = table.as_array()
    product = np.empty((k, k), dtype=np.int32)
    for b, word in enumerate(table.transversal()):
        current = np.arange(k)
        for col in word:
            current = tab[current, col]
        product[:, b] = current

    group = FiniteGroup(product)
    if P.peripheral_marks:
        group = group.with_mark(group.span(mark_elements(P, table)))
    return group


def low_index_normal_quotients(P: Presentation, max_index: int, budget: SearchBudget = None) -> list:
    """One FiniteGroup per normal subgroup of index <= max_index, marked when P has peripheral marks."""
    return [quotient_from_table(P, table) for table in enumerate_normal_tables(P, max_index, budget)]
