"""Recursive-descent parser for elements of Q(x)[y].

Grammar (whitespace ignored):

    expr   := term (('+'|'-') term)*
    term   := factor (('*'|'/')? factor)*      # juxtaposition multiplies
    factor := base ('^' uint)?
    base   := 'x' | 'y' | uint | '(' expr ')' | '-' factor

Division is only defined by y-free expressions, since results must stay in
Q(x)[y].  Errors carry the byte offset of the offending token.
"""

from __future__ import annotations

from .ratfunc import RatFunc, UniPoly
from .ypoly import YPoly


class ExprError(ValueError):
    """Parse failure with a byte offset into the source string."""

    def __init__(self, message: str, offset: int):
        self.offset = offset
        super().__init__(f"{message} at offset {offset}")


_ATOM_STARTERS = ("x", "y", "(")


class _Parser:
    def __init__(self, src: str):
        self.src = src
        self.pos = 0

    # -- lexing helpers

    def _skip_ws(self) -> None:
        while self.pos < len(self.src) and self.src[self.pos].isspace():
            self.pos += 1

    def _peek(self) -> str:
        self._skip_ws()
        return self.src[self.pos] if self.pos < len(self.src) else ""

    def _take(self) -> str:
        ch = self._peek()
        self.pos += 1
        return ch

    def _read_uint(self) -> int:
        self._skip_ws()
        start = self.pos
        while self.pos < len(self.src) and self.src[self.pos].isdigit():
            self.pos += 1
        if self.pos == start:
            raise ExprError("expected an integer", start)
        return int(self.src[start : self.pos])

    # -- grammar

    def parse(self) -> YPoly:
        out = self.expr()
        self._skip_ws()
        if self.pos < len(self.src):
            raise ExprError(f"unexpected {self.src[self.pos]!r}", self.pos)
        return out

    def expr(self) -> YPoly:
        acc = self.term()
        while True:
            ch = self._peek()
            if ch == "+":
                self._take()
                acc = acc + self.term()
            elif ch == "-":
                self._take()
                acc = acc - self.term()
            else:
                return acc

    def term(self) -> YPoly:
        acc = self.factor()
        while True:
            ch = self._peek()
            if ch == "*":
                self._take()
                acc = acc * self.factor()
            elif ch == "/":
                self._take()
                at = self.pos
                divisor = self.factor()
                acc = self._divide(acc, divisor, at)
            elif ch.isdigit() or ch in _ATOM_STARTERS:
                acc = acc * self.factor()
            else:
                return acc

    def factor(self) -> YPoly:
        base = self.base()
        if self._peek() == "^":
            self._take()
            self._skip_ws()
            if self._peek() == "-":
                raise ExprError("negative exponent", self.pos)
            k = self._read_uint()
            return base**k
        return base

    def base(self) -> YPoly:
        ch = self._peek()
        at = self.pos
        if ch == "x":
            self._take()
            return YPoly.const(UniPoly.x())
        if ch == "y":
            self._take()
            return YPoly.y()
        if ch.isdigit():
            return YPoly.const(self._read_uint())
        if ch == "(":
            self._take()
            inner = self.expr()
            if self._peek() != ")":
                raise ExprError("expected ')'", self.pos)
            self._take()
            return inner
        if ch == "-":
            self._take()
            return -self.factor()
        if ch == "":
            raise ExprError("unexpected end of input", at)
        raise ExprError(f"unexpected {ch!r}", at)

    @staticmethod
    def _divide(num: YPoly, den: YPoly, offset: int) -> YPoly:
        if den.deg_y > 0:
            raise ExprError("denominator contains y", offset)
        scalar = den.as_ratfunc()
        if scalar.is_zero():
            raise ExprError("division by zero", offset)
        return num.scale(RatFunc.one() / scalar)


def parse_poly(src: str) -> YPoly:
    """Parse an expression into Q(x)[y]."""
    return _Parser(src).parse()
