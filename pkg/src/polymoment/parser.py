"""Recursive-descent parser for one-line polynomial expressions.

Grammar, loosest binding first::

    comp   := sum ('@' comp)?              composition, right-associative
    sum    := term (('+' | '-') term)*
    term   := unary (('*' | '/') unary)*   division only by a constant
    unary  := '-' unary | '+' unary | power
    power  := atom ('^' INT)?              '**' is accepted for '^'
    atom   := NUMBER | 'x' | 'z' | 'T' '(' INT ')' | '(' comp ')'

``∘`` is accepted as a synonym of ``@``.  Error offsets are byte offsets
into the UTF-8 encoded source.
"""

from __future__ import annotations

import re
import warnings
from fractions import Fraction

from .errors import ParseError, ParseWarning
from .poly import Poly, chebyshev, compose

__all__ = ["parse_poly", "GRAMMAR"]

GRAMMAR = (
    "expr := sum ('@' expr)? ; sum := term (('+'|'-') term)* ; "
    "term := unary (('*'|'/') unary)* ; unary := '-' unary | power ; "
    "power := atom ('^' INT)? ; atom := NUMBER | x | T(INT) | '(' expr ')'"
)

_TOKEN = re.compile(
    r"\s*(?:(?P<num>\d+(?:\.\d+)?)|(?P<name>[A-Za-z_]\w*)|(?P<op>\*\*|[-+*/^@()∘]))"
)


class _Lexer:
    def __init__(self, src: str):
        self.src = src
        self.tokens: list[tuple[str, str, int]] = []
        pos = 0
        while pos < len(src):
            if src[pos:].strip() == "":
                break
            m = _TOKEN.match(src, pos)
            if not m or m.end() == pos:
                bad = pos + len(src[pos:]) - len(src[pos:].lstrip())
                raise ParseError(f"unexpected character {src[bad]!r}", self.offset(bad))
            kind = m.lastgroup
            text = m.group(kind)
            if text == "**":
                text = "^"
            if text == "∘":
                text = "@"
            self.tokens.append((kind, text, m.start(kind)))
            pos = m.end()
        self.tokens.append(("end", "", len(src)))
        self.i = 0

    def offset(self, char_index: int) -> int:
        return len(self.src[:char_index].encode("utf-8"))

    def peek(self):
        return self.tokens[self.i]

    def take(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def error(self, message: str, tok=None):
        tok = tok or self.peek()
        return ParseError(message, self.offset(tok[2]))

    def expect(self, text: str):
        tok = self.take()
        if tok[1] != text:
            raise self.error(f"expected {text!r}", tok)
        return tok


def _int_literal(lx: _Lexer, what: str) -> int:
    tok = lx.peek()
    if tok[0] == "op" and tok[1] == "-":
        raise lx.error(f"{what} must be a nonnegative integer literal")
    if tok[0] != "num" or "." in tok[1]:
        raise lx.error(f"{what} must be a nonnegative integer literal")
    lx.take()
    return int(tok[1])


def _comp(lx: _Lexer) -> Poly:
    left = _sum(lx)
    tok = lx.peek()
    if tok[1] == "@":
        lx.take()
        right = _comp(lx)
        if left.degree < 1 or right.degree < 1:
            warnings.warn(
                f"composition with a constant at offset {lx.offset(tok[2])}",
                ParseWarning,
                stacklevel=3,
            )
        return compose(left, right)
    return left


def _sum(lx: _Lexer) -> Poly:
    acc = _term(lx)
    while lx.peek()[1] in ("+", "-"):
        op = lx.take()[1]
        rhs = _term(lx)
        acc = acc + rhs if op == "+" else acc - rhs
    return acc


def _term(lx: _Lexer) -> Poly:
    acc = _unary(lx)
    while lx.peek()[1] in ("*", "/"):
        op = lx.take()
        rhs = _unary(lx)
        if op[1] == "*":
            acc = acc * rhs
        else:
            if rhs.degree > 0:
                raise lx.error("division by a nonconstant polynomial", op)
            if rhs.is_zero():
                raise lx.error("division by zero", op)
            acc = acc / rhs.coeff(0)
    return acc


def _unary(lx: _Lexer) -> Poly:
    tok = lx.peek()
    if tok[1] == "-":
        lx.take()
        return -_unary(lx)
    if tok[1] == "+":
        lx.take()
        return _unary(lx)
    return _power(lx)


def _power(lx: _Lexer) -> Poly:
    base = _atom(lx)
    if lx.peek()[1] == "^":
        lx.take()
        exp = _int_literal(lx, "exponent")
        if lx.peek()[1] == "^":
            raise lx.error("chained '^' is ambiguous; add parentheses")
        return base**exp
    return base


def _atom(lx: _Lexer) -> Poly:
    tok = lx.take()
    kind, text, _ = tok
    if kind == "num":
        return Poly([Fraction(text)])
    if kind == "name":
        if text in ("x", "z"):
            return Poly([0, 1])
        if text == "T":
            lx.expect("(")
            n = _int_literal(lx, "Chebyshev index")
            lx.expect(")")
            return chebyshev(n)
        raise lx.error(f"unknown name {text!r}", tok)
    if text == "(":
        inner = _comp(lx)
        lx.expect(")")
        return inner
    if kind == "end":
        raise lx.error("unexpected end of input", tok)
    raise lx.error(f"unexpected {text!r}", tok)


def parse_poly(src: str) -> Poly:
    """Parse an expression such as ``"x^2*(x^2-1)^2 @ T(15)"`` into a :class:`Poly`."""
    lx = _Lexer(src)
    result = _comp(lx)
    tok = lx.peek()
    if tok[0] != "end":
        raise lx.error(f"unexpected {tok[1]!r}", tok)
    return result
