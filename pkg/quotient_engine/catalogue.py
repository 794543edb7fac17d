"""
Built-in catalogue of all groups of order <= 15, loaded from permutation
generators in data/small_groups.json.
"""

from __future__ import annotations

import json
import os
import sys
from functools import lru_cache

import numpy as np
from sympy.combinatorics import Permutation, PermutationGroup

sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.abspath(__file__))))
from config import CATALOGUE_MAX_ORDER, SMALL_GROUPS_FILE

from quotient_engine.errors import InvalidFiniteGroupError, QuotientEngineError
from quotient_engine.finite_group import FiniteGroup, finite_group_iso


def group_from_permutations(generators, degree: int, name: str = "") -> FiniteGroup:
    """Multiplication table of the permutation group; element 0 is the identity."""
    perms = [Permutation(cycles, size=degree) for cycles in generators] or [Permutation(list(range(degree)))]
    elements = sorted(tuple(p) for p in PermutationGroup(perms).generate(af=True))
    index = {p: i for i, p in enumerate(elements)}

    E = np.array(elements, dtype=np.int64)
    table = np.empty((len(elements), len(elements)), dtype=np.int32)
    for a in range(len(elements)):
        # a then b: x -> b[a[x]]
        for b, row in enumerate(E[:, E[a]]):
            table[a, b] = index[tuple(row.tolist())]
    return FiniteGroup(table, name=name)


@lru_cache(maxsize=None)
def _load_catalogue() -> tuple:
    with open(SMALL_GROUPS_FILE, "r", encoding="utf-8") as f:
        entries = json.load(f)["groups"]

    groups = []
    for entry in entries:
        group = group_from_permutations(entry["generators"], entry["degree"], entry["name"])
        if group.order != entry["order"]:
            raise InvalidFiniteGroupError(
                f"catalogue entry {entry['name']} generates {group.order} elements, expected {entry['order']}"
            )
        groups.append((entry["name"], group))
    return tuple(groups)


def catalogue_groups(max_order: int = CATALOGUE_MAX_ORDER) -> list:
    """(name, FiniteGroup) for every group of order <= max_order, by order then name order in the file."""
    if max_order > CATALOGUE_MAX_ORDER:
        raise QuotientEngineError(
            f"catalogue covers orders <= {CATALOGUE_MAX_ORDER}, requested {max_order}"
        )
    return [(name, group) for name, group in _load_catalogue() if group.order <= max_order]


def identify(group: FiniteGroup) -> str | None:
    """Catalogue name of a group of order <= 15, or None."""
    if group.order > CATALOGUE_MAX_ORDER:
        return None
    for name, candidate in _load_catalogue():
        if candidate.order == group.order and candidate.invariants()[:4] == group.invariants()[:4]:
            if finite_group_iso(candidate, group):
                return name
    return None
