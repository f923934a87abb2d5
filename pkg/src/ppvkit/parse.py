"""Recursive-descent parser for rational expressions in x and t.

    expr   := term (('+' | '-') term)*
    term   := factor (('*' | '/') factor)*
    factor := base ('^' uint)?
    base   := 'x' | 't' | integer | '(' expr ')' | '-' factor

Exponents are nonnegative integer literals, so "x^(-1)" is rejected; write 1/x.
"""
from .field import RatX


class ParseError(ValueError):
    def __init__(self, msg, pos, text=""):
        super().__init__(f"{msg} at position {pos}")
        self.msg, self.pos, self.text = msg, pos, text


class _Parser:
    def __init__(self, s):
        self.s, self.i = s, 0

    def _skip(self):
        while self.i < len(self.s) and self.s[self.i].isspace():
            self.i += 1

    def peek(self):
        self._skip()
        return self.s[self.i] if self.i < len(self.s) else ""

    def fail(self, msg, pos=None):
        raise ParseError(msg, self.i if pos is None else pos, self.s)

    def expect(self, ch):
        if self.peek() != ch:
            got = self.peek() or "end of input"
            self.fail(f"expected {ch!r}, got {got!r}")
        self.i += 1

    def uint(self):
        self._skip()
        j = self.i
        while self.i < len(self.s) and self.s[self.i].isdigit():
            self.i += 1
        if j == self.i:
            self.fail("expected a nonnegative integer")
        return int(self.s[j:self.i])

    def expr(self):
        v = self.term()
        while self.peek() in ("+", "-"):
            op = self.s[self.i]
            self.i += 1
            w = self.term()
            v = v + w if op == "+" else v - w
        return v

    def term(self):
        v = self.factor()
        while self.peek() in ("*", "/"):
            op = self.s[self.i]
            pos = self.i
            self.i += 1
            w = self.factor()
            if op == "*":
                v = v * w
            else:
                if w.is_zero():
                    self.fail("division by zero", pos)
                v = v / w
        return v

    def factor(self):
        v = self.base()
        if self.peek() == "^":
            self.i += 1
            if self.peek() in ("-", "("):
                self.fail("exponent must be a nonnegative integer literal")
            v = v ** self.uint()
        return v

    def base(self):
        c = self.peek()
        if c == "x":
            self.i += 1
            return RatX.x()
        if c == "t":
            self.i += 1
            return RatX.t()
        if c.isdigit():
            return RatX(self.uint())
        if c == "(":
            self.i += 1
            v = self.expr()
            self.expect(")")
            return v
        if c == "-":
            self.i += 1
            return -self.factor()
        if c.isalpha() or c == "_":
            self.fail(f"unknown variable {c!r} (only x and t)")
        if not c:
            self.fail("unexpected end of input")
        self.fail(f"unexpected character {c!r}")


def parse_expr(s):
    if not isinstance(s, str):
        raise TypeError("expression must be a string")
    p = _Parser(s)
    if not p.peek():
        p.fail("empty expression")
    v = p.expr()
    if p.peek():
        p.fail(f"unexpected {p.peek()!r}")
    return v
