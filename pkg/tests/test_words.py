import numpy as np
import pytest

from fp_groups import (
    PeripheralMark,
    Presentation,
    PresentationError,
    UnknownGeneratorError,
    UnsupportedWordProblemError,
    abelian_invariants,
    commutator,
    cyclic_reduce,
    dehn_reduce,
    exponent_matrix,
    format_presentation,
    free_conjugator,
    free_reduce,
    inverse,
    parse_presentation,
    parse_word,
    surface_relator,
    word_reducer,
)


# ---------------------------------------------------------------
# free group words
# ---------------------------------------------------------------

def test_free_reduce():
    assert free_reduce((1, 2, -2, -1, 3)) == (3,)
    assert free_reduce((1, -1)) == ()
    assert free_reduce((1, 2, -1)) == (1, 2, -1)


def test_inverse_and_commutator():
    assert inverse((1, -2)) == (2, -1)
    assert commutator((1,), (2,)) == (1, 2, -1, -2)
    assert free_reduce(commutator((1,), (1, 1))) == ()


def test_cyclic_reduce():
    assert cyclic_reduce((2, 1, 3, -2)) == ((2,), (1, 3))
    assert cyclic_reduce((1, 2)) == ((), (1, 2))
    assert cyclic_reduce((1, -1)) == ((), ())


@pytest.mark.parametrize("u, v", [
    ((2, 1), (1, 2)),
    ((3, 1, 2, -3), (2, 1)),
    ((1, 2, -1, -2), (2, -1, -2, 1)),
    ((), ()),
])
def test_free_conjugator(u, v):
    w = free_conjugator(u, v)
    assert w is not None
    assert free_reduce(w + v + inverse(w)) == free_reduce(u)


def test_free_conjugator_rejects_non_conjugates():
    assert free_conjugator((1, 2), (1, 1)) is None
    assert free_conjugator((1, 2), (2, 1, 1)) is None
    assert free_conjugator((), (1,)) is None


# ---------------------------------------------------------------
# surface groups
# ---------------------------------------------------------------

def test_surface_relator():
    assert surface_relator(1) == (1, 2, -1, -2)
    assert surface_relator(2) == (1, 2, -1, -2, 3, 4, -3, -4)


def test_dehn_reduce_kills_relator_and_conjugates():
    r = surface_relator(2)
    assert dehn_reduce(r, 2) == ()
    assert dehn_reduce(inverse(r), 2) == ()
    assert dehn_reduce(r[4:] + r[:4], 2) == ()
    assert dehn_reduce((1,) + r + (-1,), 2) == ()
    assert dehn_reduce(r + r, 2) == ()


def test_dehn_reduce_keeps_nontrivial_words():
    assert dehn_reduce((1, 2), 2) == (1, 2)
    assert dehn_reduce((1, 2, -1, -2), 2) != ()


def test_torus_normal_form():
    assert dehn_reduce((1, 2, -1), 1) == (2,)
    assert dehn_reduce((2, 1, -2, -1), 1) == ()
    assert dehn_reduce((-2, 1, 1), 1) == (1, 1, -2)


def test_dehn_reduce_rejects_sphere():
    with pytest.raises(ValueError):
        dehn_reduce((1,), 0)


# ---------------------------------------------------------------
# presentations
# ---------------------------------------------------------------

def test_parse_word():
    names = ("x1", "t", "a")
    assert parse_word("x1 t^-1 a^3", names) == (1, -2, 3, 3, 3)
    assert parse_word("1", names) == ()
    assert parse_word("  ", names) == ()
    with pytest.raises(UnknownGeneratorError):
        parse_word("q", names)


def test_presentation_validation():
    with pytest.raises(PresentationError):
        Presentation(("a", "a"))
    with pytest.raises(UnknownGeneratorError):
        Presentation(("a", "b"), ((1, 3),))
    with pytest.raises(PresentationError):
        Presentation(("1a",))


def test_presentation_text_round_trip():
    P = Presentation(("a", "b"), ((1, 1), (1, 2, -1, -2)), (PeripheralMark("boundary", ((1,), (2, 2))),))
    text = format_presentation(P)
    assert text == "< a, b | a a, a b a^-1 b^-1 >\nperipheral 1: {a, b b}"
    Q = parse_presentation(text)
    assert Q.generator_names == P.generator_names
    assert Q.relators == P.relators
    assert Q.peripheral_marks[0].words == P.peripheral_marks[0].words


def test_parse_presentation_errors():
    with pytest.raises(PresentationError):
        parse_presentation("")
    with pytest.raises(PresentationError):
        parse_presentation("a, b | a")
    with pytest.raises(PresentationError):
        parse_presentation("< a | a >\nboundary: {a}")


def test_exponent_matrix():
    P = parse_presentation("< a, b | a^4, b^2, a b a b >")
    np.testing.assert_array_equal(exponent_matrix(P), [[4, 0], [0, 2], [2, 2]])


@pytest.mark.parametrize("text, expected", [
    ("< a | a^6 >", (0, (6,))),
    ("< a, b | a^4, b^2, a b a b >", (0, (2, 2))),
    ("< a, b | a b a^-1 b^-1 >", (2, ())),
    ("< a, b |  >", (2, ())),
    ("< a, b | a^2, b^3 >", (0, (6,))),
])
def test_abelian_invariants(text, expected):
    assert abelian_invariants(parse_presentation(text)) == expected


def test_word_reducers():
    free = word_reducer(parse_presentation("< a, b | >"))
    assert free((1, 2, -2)) == (1,)

    surface = word_reducer(Presentation(("a1", "b1", "a2", "b2"), (surface_relator(2),)))
    assert surface(surface_relator(2)) == ()

    cyclic = word_reducer(parse_presentation("< a | a^5 >"))
    assert cyclic((1,) * 7) == (1, 1)
    assert cyclic((-1,)) == (1, 1, 1, 1)

    with pytest.raises(UnsupportedWordProblemError):
        word_reducer(parse_presentation("< a, b | a^4, b^2, a b a b >"))
