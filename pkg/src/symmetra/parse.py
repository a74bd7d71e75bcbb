"""Pratt parser for polynomial expressions in x and y with exact rational coefficients."""

from __future__ import annotations

import re
from dataclasses import dataclass

from gmpy2 import mpq

from .bipoly import BiPoly
from .errors import ParseError

_TOKEN = re.compile(r"\s*(?:(\d+\.\d*|\.\d+)|(\d+)|([A-Za-z_]\w*)|(\S))")

_PREFIX_EXPECTED = ("number", "x", "y", "(", "-", "+")
MAX_EXPONENT = 1000
_BINARY = {"+": 10, "-": 10, "*": 20, "/": 20, "^": 30}


@dataclass(frozen=True)
class Token:
    kind: str  # "num", "name", "op", "end"
    text: str
    pos: int


def tokenize(text: str) -> list[Token]:
    out = []
    pos = 0
    while True:
        m = _TOKEN.match(text, pos)
        if m is None:
            break
        dec, num, name, op = m.groups()
        start = m.start(m.lastindex)
        if dec is not None:
            raise ParseError(f"decimal literal {dec!r} is not exact; write it as a fraction such as 3/2", start)
        if num is not None:
            out.append(Token("num", num, start))
        elif name is not None:
            out.append(Token("name", name, start))
        else:
            out.append(Token("op", op, start))
        pos = m.end()
    out.append(Token("end", "", len(text.rstrip()) if text.strip() else len(text)))
    return out


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.tokens = tokenize(text)
        self.i = 0

    def peek(self) -> Token:
        return self.tokens[self.i]

    def advance(self) -> Token:
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def parse(self) -> BiPoly:
        value = self.expression(0)
        tok = self.peek()
        if tok.kind != "end":
            if tok.kind in ("num", "name") or tok.text == "(":
                raise ParseError("implicit multiplication is not allowed; insert '*'", tok.pos, ("*",))
            raise ParseError(f"unexpected {tok.text!r}", tok.pos, ("operator", "end of input"))
        return value

    def expression(self, min_bp: int) -> BiPoly:
        left = self.prefix()
        while True:
            tok = self.peek()
            if tok.kind != "op" or tok.text not in _BINARY:
                return left
            bp = _BINARY[tok.text]
            if bp <= min_bp:
                return left
            self.advance()
            if tok.text == "^":
                e = self.exponent()
                if e > MAX_EXPONENT:
                    raise ParseError(f"exponent {e} exceeds {MAX_EXPONENT}", tok.pos + 1)
                left = left ** e
                continue
            right = self.expression(bp)
            if tok.text == "+":
                left = left + right
            elif tok.text == "-":
                left = left - right
            elif tok.text == "*":
                left = left * right
            else:
                if not right.is_constant() or not right.constant_value():
                    raise ParseError("division is only allowed by a nonzero constant", tok.pos)
                left = left / right.constant_value()

    def exponent(self) -> int:
        tok = self.advance()
        if tok.kind == "num":
            base = int(tok.text)
            if self.peek().text == "^":
                # right associative: 2^3^2 = 2^9
                self.advance()
                e = self.exponent()
                if base > 1 and e > MAX_EXPONENT:
                    raise ParseError(f"exponent {e} exceeds {MAX_EXPONENT}", tok.pos)
                return base ** e
            return base
        if tok.text == "(":
            inner = self.exponent()
            close = self.advance()
            if close.text != ")":
                raise ParseError("expected ')'", close.pos, (")",))
            return inner
        raise ParseError("exponent must be a nonnegative integer", tok.pos, ("number",))

    def prefix(self) -> BiPoly:
        tok = self.advance()
        if tok.kind == "num":
            return BiPoly.const(mpq(int(tok.text)))
        if tok.kind == "name":
            if tok.text == "x":
                return BiPoly.x()
            if tok.text == "y":
                return BiPoly.y()
            raise ParseError(f"unknown identifier {tok.text!r}", tok.pos, ("x", "y"))
        if tok.text == "(":
            inner = self.expression(0)
            close = self.advance()
            if close.text != ")":
                raise ParseError("expected ')'", close.pos, (")",))
            return inner
        if tok.text in ("-", "+"):
            # binds tighter than + and *, looser than ^ so that -x^2 = -(x^2)
            operand = self.expression(25)
            return -operand if tok.text == "-" else operand
        if tok.kind == "end":
            raise ParseError("unexpected end of input", tok.pos, _PREFIX_EXPECTED)
        raise ParseError(f"unexpected {tok.text!r}", tok.pos, _PREFIX_EXPECTED)


def parse_poly(text: str) -> BiPoly:
    """Exact polynomial from text such as ``1/10*x^5 - 1/2*x^3*y^2 + 1``."""
    return _Parser(text).parse()


__all__ = ["Token", "parse_poly", "tokenize"]
