"""Expression parser for algebra elements.

Grammar (whitespace-insensitive, juxtaposition is not multiplication)::

    expr   := ['+'|'-'] term (('+'|'-') term)*
    term   := factor ('*' factor)*
    factor := base ('^' ['-'] int)?
    base   := name | int | int '/' int | '(' expr ')'

``^`` binds tighter than ``*``, which binds tighter than ``+``/``-``.
Negative powers are allowed only on single-term scalars such as ``r^-2``.
"""

from __future__ import annotations

import re
from fractions import Fraction

from .algebra import FreeElement
from .coeff import LaurentCoeff, NotAMonomial, R, S, monomial_invert


class ParseError(ValueError):
    def __init__(self, message, position):
        super().__init__(f"{message} at offset {position}")
        self.message = message
        self.position = position


class UnknownSymbol(ParseError):
    def __init__(self, name, position):
        super().__init__(f"unknown symbol {name!r}", position)
        self.name = name


_TOKEN = re.compile(r"\s*(?:(?P<rat>\d+/\d+)|(?P<int>\d+)|(?P<name>[A-Za-z_][A-Za-z0-9_]*)"
                    r"|(?P<op>[-+*^()]))")


def tokenize(text):
    pos = 0
    out = []
    n = len(text)
    while pos < n:
        if text[pos].isspace():
            pos += 1
            continue
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            raise ParseError(f"unexpected character {text[pos]!r}", pos)
        kind = m.lastgroup
        start = m.start(kind)
        out.append((kind, m.group(kind), start))
        pos = m.end()
    out.append(("end", "", n))
    return out


class _Parser:
    def __init__(self, text, pres, names):
        self.toks = tokenize(text)
        self.i = 0
        self.pres = pres
        self.names = names

    def peek(self):
        return self.toks[self.i]

    def take(self):
        tok = self.toks[self.i]
        self.i += 1
        return tok

    def expect(self, value):
        tok = self.take()
        if tok[1] != value:
            raise ParseError(f"expected {value!r}", tok[2])
        return tok

    def scalar(self, c):
        if not isinstance(c, LaurentCoeff):
            c = LaurentCoeff.const(c)
        return FreeElement(self.pres, {(): c})

    def parse(self):
        val = self.expr()
        tok = self.peek()
        if tok[0] != "end":
            raise ParseError(f"unexpected {tok[1]!r}", tok[2])
        return val

    def expr(self):
        neg = False
        tok = self.peek()
        if tok[1] in "+-" and tok[0] == "op":
            self.take()
            neg = tok[1] == "-"
        val = self.term()
        if neg:
            val = -val
        while True:
            tok = self.peek()
            if tok[0] == "op" and tok[1] in "+-":
                self.take()
                self._operand(tok)
                rhs = self.term()
                val = val + rhs if tok[1] == "+" else val - rhs
            else:
                return val

    def term(self):
        val = self.factor()
        while self.peek()[1] == "*" and self.peek()[0] == "op":
            op = self.take()
            self._operand(op)
            val = val * self.factor()
        return val

    def _operand(self, op):
        kind, value, _ = self.peek()
        if kind in ("end",) or (kind == "op" and value != "("):
            raise ParseError(f"missing operand after {op[1]!r}", op[2])

    def factor(self):
        start = self.peek()[2]
        val = self.base()
        if self.peek()[1] == "^" and self.peek()[0] == "op":
            self.take()
            sign = 1
            if self.peek()[1] == "-":
                self.take()
                sign = -1
            tok = self.take()
            if tok[0] != "int":
                raise ParseError("expected integer exponent", tok[2])
            n = sign * int(tok[1])
            if n < 0:
                if set(val.terms) - {()}:
                    raise ParseError("negative power of a generator", start)
                try:
                    c = monomial_invert(val.terms.get((), LaurentCoeff.const(0)))
                except NotAMonomial:
                    raise ParseError("negative power of a non-monomial scalar", start) from None
                val = self.scalar(c ** (-n))
            else:
                val = val ** n
        return val

    def base(self):
        kind, value, pos = self.take()
        if kind == "int":
            return self.scalar(int(value))
        if kind == "rat":
            num, den = value.split("/")
            if int(den) == 0:
                raise ParseError("zero denominator", pos)
            return self.scalar(Fraction(int(num), int(den)))
        if kind == "name":
            if value == "r":
                return self.scalar(R)
            if value == "s":
                return self.scalar(S)
            try:
                return self.names[value]
            except KeyError:
                raise UnknownSymbol(value, pos) from None
        if value == "(":
            val = self.expr()
            self.expect(")")
            return val
        raise ParseError(f"unexpected {value!r}" if value else "unexpected end of input", pos)


def parse(text, p, names=None):
    """Parse ``text`` into a FreeElement of presentation ``p``."""
    if names is None:
        from .presentations import symbol_table
        names = symbol_table(p)
    return _Parser(text, p, names).parse()
