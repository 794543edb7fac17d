import random

import pytest

from cli import SfsSyntaxError, format_sfs, parse_sfs
from config import RANDOM_SEED
from data.generate_instances import random_seifert_data, random_sfs_text
from seifert import SeifertData


@pytest.mark.parametrize("text, expected", [
    ("SFS(g=0, s=0, b=-1; 1/2, 1/4, 1/4)", SeifertData(0, 0, -1, ((2, 1), (4, 1), (4, 1)))),
    ("(-1; 1/2, 1/4, 1/4)", SeifertData(0, 0, -1, ((2, 1), (4, 1), (4, 1)))),
    ("(-1;1/4,1/2,1/4)", SeifertData(0, 0, -1, ((2, 1), (4, 1), (4, 1)))),
    ("SFS(g=0, s=1; 1/3, 1/4)", SeifertData(0, 1, None, ((3, 1), (4, 1)))),
    ("sfs ( g = 2 , s = 0 , b = 3 ; )", SeifertData(2, 0, 3)),
    ("SFS(g=1, s=0, b=0;)", SeifertData(1, 0, 0)),
    ("(0;)", SeifertData(0, 0, 0)),
])
def test_parse(text, expected):
    assert parse_sfs(text) == expected


def test_format_round_trip():
    M = SeifertData(1, 2, None, ((5, 2), (7, 3)))
    assert format_sfs(M) == "SFS(g=1, s=2; 2/5, 3/7)"
    assert parse_sfs(format_sfs(M)) == M


def test_random_round_trip():
    rng = random.Random(RANDOM_SEED)
    for _ in range(300):
        M = random_seifert_data(rng)
        assert parse_sfs(random_sfs_text(rng, M)) == M
        assert parse_sfs(str(M)) == M


@pytest.mark.parametrize("text, position, reason", [
    ("SFS(g=0, s=0; 1/2)", 12, "b required when s=0"),
    ("SFS(g=0, s=1, b=0; 1/2)", 14, "b must be absent when s > 0"),
    ("(-1; 2/4, 1/2)", 5, "gcd(alpha, beta) != 1"),
    ("(-1; 3/2)", 5, "need 0 < beta < alpha"),
    ("(-1; 1/1)", 5, "must be >= 2"),
    ("SFS(g=-1, s=0, b=0;)", 6, "genus must be non-negative"),
    ("SFS(g=0, n=1; )", 9, "only orientable bases"),
    ("(-1; 1/2", 8, "expected ')'"),
    ("(-1; 1/2) x", 10, "trailing input"),
    ("[-1; 1/2]", 0, "unexpected character"),
    ("M(-1; 1/2)", 0, "expected 'SFS(' or '('"),
])
def test_syntax_errors(text, position, reason):
    with pytest.raises(SfsSyntaxError) as excinfo:
        parse_sfs(text)
    assert excinfo.value.position == position
    assert reason in excinfo.value.reason


def test_syntax_error_is_a_value_error():
    with pytest.raises(ValueError):
        parse_sfs("")
