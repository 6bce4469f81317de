"""Text and JSON front end for elements.

Grammar::

    element := '0' | term ('+' term)*
    term    := '1' | qfactor+
    qfactor := 'Q' '^'? uint
"""
from __future__ import annotations

import json
from typing import Iterable

from .errors import ParseError
from .seqcore import order_key, sort_sequences

MAX_SUPERSCRIPT = 2**20


class _Scanner:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def skip_ws(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        self.skip_ws()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def take(self, ch: str):
        if self.peek() != ch:
            found = repr(self.peek()) if self.peek() else "end of input"
            raise ParseError(f"expected {ch!r}, found {found}", self.pos)
        self.pos += 1

    def uint(self, max_value: int) -> int:
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if start == self.pos:
            raise ParseError("expected a superscript", start)
        value = int(self.text[start:self.pos])
        if value > max_value:
            raise ParseError(f"superscript {value} exceeds the bound {max_value}", start)
        return value


def parse_element(text: str, max_superscript: int = MAX_SUPERSCRIPT) -> frozenset:
    sc = _Scanner(text)
    if sc.peek() == "0":
        sc.pos += 1
        if sc.peek():
            raise ParseError("unexpected input after '0'", sc.pos)
        return frozenset()
    terms: set = set()
    while True:
        terms ^= {_parse_term(sc, max_superscript)}
        if not sc.peek():
            return frozenset(terms)
        sc.take("+")


def _parse_term(sc: _Scanner, max_superscript: int) -> tuple[int, ...]:
    if sc.peek() == "1":
        sc.pos += 1
        return ()
    factors = []
    while sc.peek() == "Q":
        sc.pos += 1
        if sc.pos < len(sc.text) and sc.text[sc.pos] == "^":
            sc.pos += 1
        factors.append(sc.uint(max_superscript))
    if not factors:
        found = repr(sc.peek()) if sc.peek() else "end of input"
        raise ParseError(f"expected '1' or 'Q', found {found}", sc.pos)
    return tuple(factors)


def format_monomial(s: Iterable[int]) -> str:
    s = tuple(s)
    return " ".join(f"Q^{i}" for i in s) if s else "1"


def format_element(x: Iterable[Iterable[int]], style: str = "text") -> str:
    terms = sort_sequences(x)
    if style == "json":
        return json.dumps({"terms": [list(s) for s in terms]})
    if not terms:
        return "0"
    return " + ".join(format_monomial(s) for s in terms)


def format_tensor(t: Iterable[tuple]) -> str:
    terms = sorted(t, key=lambda tup: [order_key(s) for s in tup])
    if not terms:
        return "0"
    return " + ".join(" ⊗ ".join(format_monomial(s) for s in tup) for tup in terms)
