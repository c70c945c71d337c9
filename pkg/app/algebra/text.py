from __future__ import annotations

import re
from typing import Optional, Union

from app.algebra.monomial import MAX_EXPONENT, ExponentOverflowError, ExtMonomial, Monomial
from app.algebra.polynomial import ExtPolynomial, Polynomial

# poly   := "0" | term ("+" term)*
# term   := factor ("*" factor)*
# factor := "1" | "a" ["^" int] | "w2" ["^" int] | "w3" ["^" int]
TOKEN_RE = re.compile(r"\s*(?:(?P<var>w2|w3|a)|(?P<int>\d+)|(?P<op>[+*^]))")


class PolynomialSyntaxError(ValueError):
    def __init__(self, message: str, position: int):
        super().__init__(f"{message} at position {position}")
        self.position = position


def _tokenize(text: str) -> list[tuple[str, str, int]]:
    tokens: list[tuple[str, str, int]] = []
    pos = 0
    while pos < len(text):
        if text[pos].isspace():
            pos += 1
            continue
        m = TOKEN_RE.match(text, pos)
        if m is None or m.end() == pos:
            raise PolynomialSyntaxError(f"unexpected character {text[pos]!r}", pos)
        kind = m.lastgroup or ""
        start = m.start(kind)
        tokens.append((kind, m.group(kind), start))
        pos = m.end()
    return tokens


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.tokens = _tokenize(text)
        self.i = 0

    def peek(self) -> Optional[tuple[str, str, int]]:
        return self.tokens[self.i] if self.i < len(self.tokens) else None

    def take(self) -> tuple[str, str, int]:
        tok = self.peek()
        if tok is None:
            raise PolynomialSyntaxError("unexpected end of input", len(self.text))
        self.i += 1
        return tok

    def exponent(self) -> int:
        tok = self.peek()
        if tok is None or tok[1] != "^":
            return 1
        self.take()
        kind, value, pos = self.take()
        if kind != "int":
            raise PolynomialSyntaxError(f"expected an integer exponent, got {value!r}", pos)
        e = int(value)
        if e > MAX_EXPONENT:
            raise ExponentOverflowError(f"exponent {e} at position {pos} exceeds {MAX_EXPONENT}")
        return e

    def term(self) -> tuple[int, int, int, int]:
        r = b = c = 0
        first_pos = self.peek()[2] if self.peek() else len(self.text)
        while True:
            kind, value, pos = self.take()
            if kind == "int":
                if value != "1":
                    raise PolynomialSyntaxError(f"only the constant 1 is a valid factor, got {value!r}", pos)
            elif kind == "var":
                e = self.exponent()
                if value == "a":
                    r += e
                elif value == "w2":
                    b += e
                else:
                    c += e
            else:
                raise PolynomialSyntaxError(f"expected a factor, got {value!r}", pos)
            tok = self.peek()
            if tok is None or tok[1] != "*":
                return r, b, c, first_pos
            self.take()

    def poly(self) -> list[tuple[int, int, int, int]]:
        if not self.tokens:
            raise PolynomialSyntaxError("empty polynomial", 0)
        if len(self.tokens) == 1 and self.tokens[0][1] == "0":
            self.i = 1
            return []
        terms = [self.term()]
        while self.peek() is not None:
            kind, value, pos = self.take()
            if value != "+":
                raise PolynomialSyntaxError(f"expected '+', got {value!r}", pos)
            terms.append(self.term())
        return terms


def parse(text: str, t: Optional[int] = None) -> Union[Polynomial[Monomial], ExtPolynomial]:
    """
    Parse the polynomial grammar into a Polynomial, or an ExtPolynomial when `t` is given.

    Duplicate terms collapse mod 2 and term order is irrelevant.
    """
    terms = _Parser(text).poly()
    if t is not None:
        return ExtPolynomial((ExtMonomial(r, b, c, t) for r, b, c, _ in terms), t=t)
    for r, _, _, pos in terms:
        if r:
            raise PolynomialSyntaxError("generator 'a' needs a tower parameter t", pos)
    return Polynomial(Monomial(b, c) for _, b, c, _ in terms)


def format_poly(p: Polynomial) -> str:
    """Canonical text: decreasing lex order, explicit '*', exponent 1 omitted, '0' for zero."""
    return str(p)
