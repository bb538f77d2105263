"""Recursive-descent parser for the scalar grammar.

    expr   := ['+'|'-'] term (('+'|'-') term)*
    term   := factor (('*'|'/') factor)*
    factor := atom ('^' ['-'] INT)?
    atom   := INT | 'z' | 't' | '(' expr ')' | ('+'|'-') factor

Implicit multiplication is not accepted: write ``2*t``, not ``2t``.
"""

from ..errors import DivisionByZeroError, ParseError
from .ratfunc import FunctionField, RatFunc


class _Parser:
    def __init__(self, text, order):
        self.text = text
        self.pos = 0
        self.K = FunctionField(order)

    def peek(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def fail(self, message):
        raise ParseError(message, self.text, self.pos)

    def expect(self, ch):
        if self.peek() != ch:
            self.fail(f"expected {ch!r}")
        self.pos += 1

    def integer(self):
        self.peek()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if start == self.pos:
            self.fail("expected an integer")
        return int(self.text[start:self.pos])

    def expr(self):
        value = self.term()
        while self.peek() in ("+", "-") and self.peek():
            op = self.text[self.pos]
            self.pos += 1
            rhs = self.term()
            value = value + rhs if op == "+" else value - rhs
        return value

    def term(self):
        value = self.factor()
        while self.peek() in ("*", "/") and self.peek():
            op = self.text[self.pos]
            self.pos += 1
            at = self.pos
            rhs = self.factor()
            if op == "*":
                value = value * rhs
            else:
                if not rhs:
                    raise DivisionByZeroError(f"division by zero polynomial at position {at}: {self.text!r}")
                value = value / rhs
        return value

    def factor(self):
        base = self.atom()
        if self.peek() == "^":
            self.pos += 1
            sign = 1
            if self.peek() == "-":
                self.pos += 1
                sign = -1
            at = self.pos
            exp = sign * self.integer()
            if exp < 0 and not base:
                raise DivisionByZeroError(f"zero raised to a negative power at position {at}: {self.text!r}")
            base = base ** exp
        return base

    def atom(self):
        ch = self.peek()
        if ch == "(":
            self.pos += 1
            value = self.expr()
            self.expect(")")
            return value
        if ch in ("+", "-"):
            self.pos += 1
            value = self.factor()
            return -value if ch == "-" else value
        if ch == "z":
            self.pos += 1
            return self.K.z
        if ch == "t":
            self.pos += 1
            return self.K.t
        if ch.isdigit():
            return RatFunc.constant(self.K.order, self.integer())
        if not ch:
            self.fail("unexpected end of input")
        self.fail(f"unexpected character {ch!r}")


def parse_scalar(text, order=1):
    """Parse ``text`` into a canonical :class:`RatFunc` over Q(zeta_order)(t)."""
    if not isinstance(text, str):
        if isinstance(text, int) and not isinstance(text, bool):
            return RatFunc.constant(order, text)
        raise ParseError("scalar must be a string or integer", repr(text), 0)
    parser = _Parser(text, order)
    if not parser.peek():
        parser.fail("empty scalar")
    value = parser.expr()
    if parser.peek():
        parser.fail(f"unexpected character {parser.peek()!r}")
    return value
