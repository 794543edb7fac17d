"""
Homomorphisms from a finitely presented group into catalogue groups: exact
counts (an isomorphism invariant) and the brute-force quotient oracle.
"""

import logging
import os
import sys

sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.abspath(__file__))))
from config import DEFAULT_CATALOGUE_BOUND, MAX_SEARCH_NODES

from fp_groups import Presentation
from quotient_engine.catalogue import catalogue_groups
from quotient_engine.errors import BudgetExceededError, MissingMarkError
from quotient_engine.quotients import QuotientSet, deduplicate

logger = logging.getLogger(__name__)


def _evaluate(T, word, images) -> int:
    element = 0
    for letter in word:
        g = images[abs(letter) - 1]
        element = int(T.table[element, g if letter > 0 else T.inverses[g]])
    return element


def iter_homomorphisms(P: Presentation, T, max_nodes: int = MAX_SEARCH_NODES):
    """
    Yield generator image lists of every homomorphism from P's group to T.
    A relator is checked as soon as the last generator it involves is assigned.
    """
    r = P.generator_count
    checks = [[] for _ in range(r + 1)]
    for relator in P.relators:
        if relator:
            checks[max(abs(l) for l in relator)].append(relator)

    images = [0] * r
    nodes = 0

    def assign(i):
        nonlocal nodes
        if i == r:
            yield list(images)
            return
        for g in range(T.order):
            nodes += 1
            if nodes > max_nodes:
                raise BudgetExceededError(f"homomorphism search exceeded {max_nodes} nodes")
            images[i] = g
            if all(_evaluate(T, relator, images) == 0 for relator in checks[i + 1]):
                yield from assign(i + 1)

    yield from assign(0)


def count_homomorphisms(P: Presentation, T, max_nodes: int = MAX_SEARCH_NODES) -> int:
    return sum(1 for _ in iter_homomorphisms(P, T, max_nodes))


def hom_count_signature(P: Presentation, catalogue_bound: int = DEFAULT_CATALOGUE_BOUND) -> dict:
    """Number of homomorphisms to each catalogue group of order <= catalogue_bound."""
    signature = {name: count_homomorphisms(P, T) for name, T in catalogue_groups(catalogue_bound)}
    logger.debug("hom_count_signature: %s", signature)
    return signature


def oracle_quotient_set(P: Presentation, n: int, paired: bool = False) -> QuotientSet:
    """
    Quotients of order <= n found by brute force: surjections onto every catalogue
    group, with the image of the first peripheral mark when paired.
    """
    if paired and not P.peripheral_marks:
        raise MissingMarkError("paired quotients need a presentation with a peripheral mark")

    found = []
    for name, T in catalogue_groups(min(n, 15)):
        for images in iter_homomorphisms(P, T):
            if T.span(images).size != T.order:
                continue
            if not paired:
                found.append(T)
                break
            mark = [_evaluate(T, word, images) for word in P.peripheral_marks[0].words]
            found.append(T.with_mark(T.span(mark)))
    return QuotientSet(bound=n, paired=paired, classes=deduplicate(found, paired))
