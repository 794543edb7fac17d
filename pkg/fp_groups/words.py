"""
Words in free and closed-surface groups.

A word is a tuple of nonzero signed generator indices: i stands for the i-th
generator (1-based) and -i for its inverse.
"""

from __future__ import annotations

from functools import lru_cache


def free_reduce(word) -> tuple:
    """Cancel adjacent x x^-1 pairs until none remain."""
    stack = []
    for letter in word:
        if stack and stack[-1] == -letter:
            stack.pop()
        else:
            stack.append(letter)
    return tuple(stack)


def inverse(word) -> tuple:
    return tuple(-letter for letter in reversed(word))


def power(word, exponent: int) -> tuple:
    if exponent < 0:
        return tuple(inverse(word)) * (-exponent)
    return tuple(word) * exponent


def commutator(u, v) -> tuple:
    """[u, v] = u v u^-1 v^-1"""
    return tuple(u) + tuple(v) + inverse(u) + inverse(v)


def letter_power(index: int, exponent: int) -> tuple:
    if exponent < 0:
        return (-index,) * (-exponent)
    return (index,) * exponent


def cyclic_reduce(word) -> tuple:
    """Split a freely reduced word as p c p^-1 with c cyclically reduced; returns (p, c)."""
    word = free_reduce(word)
    start, end = 0, len(word)
    while end - start >= 2 and word[start] == -word[end - 1]:
        start += 1
        end -= 1
    return word[:start], word[start:end]


def free_conjugator(u, v):
    """
    A word w with u = w v w^-1 in the free group, or None if u and v are not conjugate.
    """
    p, core_u = cyclic_reduce(u)
    q, core_v = cyclic_reduce(v)
    if len(core_u) != len(core_v):
        return None
    if not core_u:
        return free_reduce(p + inverse(p)) if not core_v else None
    for shift in range(len(core_v)):
        if core_v[shift:] + core_v[:shift] == core_u:
            head = core_v[:shift]
            return free_reduce(p + inverse(head) + inverse(q))
    return None


@lru_cache(maxsize=None)
def surface_relator(genus: int) -> tuple:
    """[a1, b1] ... [ag, bg] with a_j = 2j - 1 and b_j = 2j."""
    word = ()
    for j in range(1, genus + 1):
        word += commutator((2 * j - 1,), (2 * j,))
    return word


@lru_cache(maxsize=None)
def _relator_rotations(genus: int) -> tuple:
    relator = surface_relator(genus)
    rotations = set()
    for r in (relator, inverse(relator)):
        for shift in range(len(r)):
            rotations.add(r[shift:] + r[:shift])
    return tuple(sorted(rotations))


def _abelian_normal_form(word) -> tuple:
    exponents = {1: 0, 2: 0}
    for letter in word:
        exponents[abs(letter)] += 1 if letter > 0 else -1
    return letter_power(1, exponents[1]) + letter_power(2, exponents[2])


def dehn_reduce(word, surface_genus: int) -> tuple:
    """
    Reduce a word in the fundamental group of the closed orientable surface of
    the given genus. The result is empty iff the word is trivial.

    Genus 1 uses the abelian normal form a^i b^j. Higher genus runs Dehn's
    algorithm: any subword longer than half the relator (2g letters) that is a
    piece of a cyclic permutation r = u v of the relator or its inverse is
    replaced by v^-1, which is strictly shorter.
    """
    if surface_genus < 1:
        raise ValueError(f"surface genus must be >= 1, got {surface_genus}")
    if surface_genus == 1:
        return _abelian_normal_form(word)

    half = 2 * surface_genus
    rotations = _relator_rotations(surface_genus)
    word = free_reduce(word)
    changed = True
    while changed:
        changed = False
        for start in range(len(word)):
            for rotation in rotations:
                length = 0
                limit = min(len(rotation), len(word) - start)
                while length < limit and word[start + length] == rotation[length]:
                    length += 1
                if length > half:
                    word = free_reduce(word[:start] + inverse(rotation[length:]) + word[start + length:])
                    changed = True
                    break
            if changed:
                break
    return word
