"""
Parser for Seifert data written as
    SFS(g=<int>, s=<int>[, b=<int>]; beta/alpha, ...)
or in the compact closed-over-the-sphere form (b; beta/alpha, ...).
"""

from __future__ import annotations

import re

from sympy import igcd

from seifert import SeifertData

_TOKEN = re.compile(r"\s*(?:(?P<int>-?\d+)|(?P<name>[A-Za-z]+)|(?P<punct>[(),;=/]))")


class SfsSyntaxError(ValueError):
    """Malformed Seifert data text; `position` is a 0-based character offset."""

    def __init__(self, position: int, reason: str):
        super().__init__(f"position {position}: {reason}")
        self.position = position
        self.reason = reason


def _tokenize(text: str) -> list:
    tokens = []
    position = 0
    while position < len(text):
        if text[position:].strip() == "":
            break
        match = _TOKEN.match(text, position)
        if not match:
            offset = position + len(text[position:]) - len(text[position:].lstrip())
            raise SfsSyntaxError(offset, f"unexpected character {text[offset]!r}")
        kind = match.lastgroup
        start = match.start(kind)
        value = match.group(kind)
        tokens.append((kind, value, start))
        position = match.end()
    tokens.append(("end", "", len(text)))
    return tokens


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.tokens = _tokenize(text)
        self.i = 0

    @property
    def current(self):
        return self.tokens[self.i]

    def take(self, kind: str, value: str = None, what: str = None):
        token_kind, token_value, position = self.current
        if token_kind != kind or (value is not None and token_value.lower() != value):
            found = "end of input" if token_kind == "end" else repr(token_value)
            raise SfsSyntaxError(position, f"expected {what or value or kind}, found {found}")
        self.i += 1
        return token_value, position

    def peek(self, value: str) -> bool:
        return self.current[0] in ("punct", "name") and self.current[1].lower() == value

    def integer(self, what: str) -> tuple:
        value, position = self.take("int", what=what)
        return int(value), position

    def fibers(self) -> list:
        fibers = []
        if self.peek(")"):
            return fibers
        while True:
            beta, position = self.integer("beta")
            self.take("punct", "/")
            alpha, _ = self.integer("alpha")
            if alpha < 2:
                raise SfsSyntaxError(position, f"multiplicity of {beta}/{alpha} must be >= 2")
            if not 0 < beta < alpha:
                raise SfsSyntaxError(position, f"{beta}/{alpha} is not normalized: need 0 < beta < alpha")
            if igcd(alpha, beta) != 1:
                raise SfsSyntaxError(position, f"{beta}/{alpha} is not normalized: gcd(alpha, beta) != 1")
            fibers.append((alpha, beta))
            if not self.peek(","):
                return fibers
            self.take("punct", ",")

    def field(self, name: str) -> tuple:
        self.take("name", name, what=f"'{name}='")
        self.take("punct", "=")
        return self.integer(name)

    def parse(self) -> SeifertData:
        if self.peek("sfs"):
            data = self.full()
        elif self.peek("("):
            data = self.compact()
        else:
            raise SfsSyntaxError(self.current[2], "expected 'SFS(' or '('")
        if self.current[0] != "end":
            raise SfsSyntaxError(self.current[2], f"trailing input {self.current[1]!r}")
        return data

    def full(self) -> SeifertData:
        self.take("name", "sfs")
        self.take("punct", "(")
        genus, g_position = self.field("g")
        if genus < 0:
            raise SfsSyntaxError(g_position, "genus must be non-negative")
        self.take("punct", ",")
        if self.current[0] == "name" and self.current[1].lower() not in ("s",):
            raise SfsSyntaxError(self.current[2], f"unknown field {self.current[1]!r}; only orientable bases (g, s, b) are supported")
        boundary, s_position = self.field("s")
        if boundary < 0:
            raise SfsSyntaxError(s_position, "boundary count must be non-negative")

        obstruction = None
        if self.peek(","):
            self.take("punct", ",")
            b_token = self.current[2]
            obstruction, _ = self.field("b")
            if boundary > 0:
                raise SfsSyntaxError(b_token, "b must be absent when s > 0")
        separator = self.current[2]
        self.take("punct", ";")
        if boundary == 0 and obstruction is None:
            raise SfsSyntaxError(separator, "b required when s=0")
        fibers = self.fibers()
        self.take("punct", ")", what="')'")
        return SeifertData(genus, boundary, obstruction, tuple(fibers))

    def compact(self) -> SeifertData:
        self.take("punct", "(")
        obstruction, _ = self.integer("b")
        self.take("punct", ";")
        fibers = self.fibers()
        self.take("punct", ")", what="')'")
        return SeifertData(0, 0, obstruction, tuple(fibers))


def parse_sfs(text: str) -> SeifertData:
    """Parse either form; whitespace is insignificant. Raises SfsSyntaxError."""
    return _Parser(text).parse()


def format_sfs(M: SeifertData) -> str:
    return str(M)
