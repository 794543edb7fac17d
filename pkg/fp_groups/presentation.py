"""
Finite presentations with peripheral marks, their text format and abelian invariants.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

import numpy as np
from sympy import Matrix
from sympy.matrices.normalforms import smith_normal_form
from sympy.polys.domains import ZZ

from fp_groups.errors import PresentationError, UnknownGeneratorError, UnsupportedWordProblemError
from fp_groups.words import dehn_reduce, free_reduce, surface_relator

_NAME = re.compile(r"[A-Za-z][A-Za-z0-9_]*")
_LETTER = re.compile(r"\s*([A-Za-z][A-Za-z0-9_]*)(?:\s*\^\s*(-?\d+))?")


def _as_word(word) -> tuple:
    return tuple(int(letter) for letter in word)


@dataclass(frozen=True)
class PeripheralMark:
    """
    A named generating set of a peripheral subgroup.

    `product_with_center` marks subgroups of the form H x Z: direct_with_Z
    extends them by the new central generator.
    """

    name: str
    words: tuple
    product_with_center: bool = True

    def __post_init__(self):
        object.__setattr__(self, "words", tuple(_as_word(w) for w in self.words))


@dataclass(frozen=True)
class Presentation:
    """< generator_names | relators > plus peripheral marks. Words use 1-based signed indices."""

    generator_names: tuple
    relators: tuple = ()
    peripheral_marks: tuple = ()

    def __post_init__(self):
        names = tuple(self.generator_names)
        if len(set(names)) != len(names):
            raise PresentationError(f"duplicate generator names in {names}")
        for name in names:
            if not _NAME.fullmatch(name):
                raise PresentationError(f"invalid generator name {name!r}")
        object.__setattr__(self, "generator_names", names)

        relators = tuple(_as_word(r) for r in self.relators)
        object.__setattr__(self, "relators", relators)
        object.__setattr__(self, "peripheral_marks", tuple(self.peripheral_marks))

        for word in relators:
            self.check_word(word)
        for mark in self.peripheral_marks:
            for word in mark.words:
                self.check_word(word)

    @property
    def generator_count(self) -> int:
        return len(self.generator_names)

    def check_word(self, word) -> None:
        for letter in word:
            if letter == 0 or abs(letter) > self.generator_count:
                raise UnknownGeneratorError(
                    f"letter {letter} outside generators 1..{self.generator_count}"
                )

    def format_word(self, word) -> str:
        return format_word(word, self.generator_names)

    def __str__(self) -> str:
        return format_presentation(self)


def parse_word(text: str, names) -> tuple:
    """'x1 t^-1 a^3' -> signed indices; '1' or '' is the empty word."""
    text = text.strip()
    if text in ("", "1"):
        return ()
    index = {name: i + 1 for i, name in enumerate(names)}
    word = []
    position = 0
    while position < len(text):
        match = _LETTER.match(text, position)
        if not match:
            if text[position:].strip() == "":
                break
            raise PresentationError(f"cannot parse word {text!r} at position {position}")
        name, exponent = match.group(1), int(match.group(2) or 1)
        if name not in index:
            raise UnknownGeneratorError(f"unknown generator {name!r} in {text!r}")
        letter = index[name] if exponent > 0 else -index[name]
        word.extend([letter] * abs(exponent))
        position = match.end()
    return tuple(word)


def format_word(word, names) -> str:
    if not word:
        return "1"
    return " ".join(names[abs(l) - 1] + ("^-1" if l < 0 else "") for l in word)


def format_presentation(P: Presentation) -> str:
    """Deterministic text form; peripheral marks follow on their own lines."""
    names = P.generator_names
    lines = [
        "< " + ", ".join(names) + " | "
        + ", ".join(format_word(r, names) for r in P.relators) + " >"
    ]
    for j, mark in enumerate(P.peripheral_marks, start=1):
        words = ", ".join(format_word(w, names) for w in mark.words)
        lines.append(f"peripheral {j}: {{{words}}}")
    return "\n".join(lines)


def parse_presentation(text: str) -> Presentation:
    lines = [line.strip() for line in text.strip().splitlines() if line.strip()]
    if not lines:
        raise PresentationError("empty presentation text")

    head = re.fullmatch(r"<(.*)\|(.*)>", lines[0])
    if not head:
        raise PresentationError(f"expected '< generators | relators >', got {lines[0]!r}")
    names = tuple(n.strip() for n in head.group(1).split(",") if n.strip())
    relators = tuple(parse_word(r, names) for r in head.group(2).split(",") if r.strip())

    marks = []
    for line in lines[1:]:
        match = re.fullmatch(r"peripheral\s+(\d+)\s*:\s*\{(.*)\}", line)
        if not match:
            raise PresentationError(f"cannot parse peripheral line {line!r}")
        words = tuple(parse_word(w, names) for w in match.group(2).split(",") if w.strip())
        marks.append(PeripheralMark(f"peripheral {match.group(1)}", words))
    return Presentation(names, relators, tuple(marks))


def exponent_matrix(P: Presentation) -> np.ndarray:
    """Relator exponent sums, one row per relator."""
    matrix = np.zeros((len(P.relators), P.generator_count), dtype=np.int64)
    for row, relator in enumerate(P.relators):
        for letter in relator:
            matrix[row, abs(letter) - 1] += 1 if letter > 0 else -1
    return matrix


def abelian_invariants(P: Presentation) -> tuple:
    """
    Abelianization as (free rank, torsion coefficients), read off the integer
    Smith normal form of the relator matrix.
    """
    matrix = exponent_matrix(P)
    ngens = P.generator_count
    if matrix.size == 0:
        return ngens, ()

    # zero rows and columns do not change the nonzero invariant factors
    size = max(matrix.shape)
    square = np.zeros((size, size), dtype=np.int64)
    square[: matrix.shape[0], : matrix.shape[1]] = matrix
    snf = smith_normal_form(Matrix(square.tolist()), domain=ZZ)

    factors = [abs(int(snf[i, i])) for i in range(size) if snf[i, i] != 0]
    torsion = tuple(sorted(d for d in factors if d > 1))
    return ngens - len(factors), torsion


def word_reducer(N: Presentation):
    """
    A function returning a normal form of words in N, empty exactly for trivial
    elements. Supported: free groups, the standard closed-surface groups and
    finite cyclic groups < a | a^k >.
    """
    if not N.relators:
        return free_reduce

    if len(N.relators) == 1:
        relator = N.relators[0]
        if N.generator_count % 2 == 0 and N.generator_count >= 2:
            genus = N.generator_count // 2
            if relator == surface_relator(genus):
                return lambda word: dehn_reduce(word, genus)
        if N.generator_count == 1 and relator and len(set(relator)) == 1:
            modulus = len(relator)

            def reduce_cyclic(word):
                exponent = sum(1 if letter > 0 else -1 for letter in word) % modulus
                return (1,) * exponent

            return reduce_cyclic

    raise UnsupportedWordProblemError(
        f"no word problem solver for {format_presentation(N).splitlines()[0]}"
    )
