"""Recursive-descent parser for polynomial and rational-function text.

Grammar::

    expr     := term (('+' | '-') term)*
    term     := unary (('*' | '/') unary)*
    unary    := ('+' | '-') unary | power
    power    := atom ('^' exponent)?
    exponent := INT | '(' ('+' | '-')? INT ')'
    atom     := INT | VAR | '(' expr ')'

Error offsets are 1-based columns.
"""

import re
from fractions import Fraction

from ..errors import PolySyntaxError, UnknownVariable
from ..polyalg import BiPoly, RationalFunction, UniPoly

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_]\w*)|(\S))")


def tokenize(text):
    toks = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:  # only trailing whitespace left
            break
        num, name, sym = m.groups()
        start = m.start(m.lastindex) + 1
        if num is not None:
            toks.append(("num", int(num), start))
        elif name is not None:
            toks.append(("var", name, start))
        elif sym in "+-*/^()":
            toks.append((sym, sym, start))
        else:
            raise PolySyntaxError(f"unexpected character {sym!r}", text, start)
        pos = m.end()
    return toks


class _BiRing:
    names = {"x": BiPoly.x, "y": BiPoly.y}
    allow_general_division = False
    allow_negative_powers = False

    def const(self, c):
        return BiPoly.const(c)

    def is_const(self, v):
        return v.is_constant()

    def const_value(self, v):
        return v.constant_term


class _UniRing:
    allow_general_division = False
    allow_negative_powers = False

    def __init__(self, var):
        self.names = {var: UniPoly.t}

    def const(self, c):
        return UniPoly.const(c)

    def is_const(self, v):
        return v.is_constant()

    def const_value(self, v):
        return v.coeff(0)


class _RatRing:
    allow_general_division = True
    allow_negative_powers = True

    def __init__(self, var):
        self.names = {var: RationalFunction.t}

    def const(self, c):
        return RationalFunction(UniPoly.const(c))

    def is_const(self, v):
        return v.is_constant()

    def const_value(self, v):
        return v.num.coeff(0) / v.den.coeff(0)


class _Parser:
    def __init__(self, text, ring):
        self.text = text
        self.ring = ring
        self.toks = tokenize(text)
        self.i = 0

    def peek(self):
        return self.toks[self.i] if self.i < len(self.toks) else None

    def end_offset(self):
        return len(self.text.rstrip()) + 1

    def error(self, msg, tok=None):
        offset = tok[2] if tok else self.end_offset()
        raise PolySyntaxError(msg, self.text, offset)

    def take(self, kind=None):
        tok = self.peek()
        if tok is None:
            self.error("unexpected end of input")
        if kind is not None and tok[0] != kind:
            self.error(f"expected {kind!r}", tok)
        self.i += 1
        return tok

    def parse(self):
        if not self.toks:
            self.error("empty expression")
        value = self.expr()
        tok = self.peek()
        if tok is not None:
            self.error(f"unexpected {tok[1]!r}", tok)
        return value

    def expr(self):
        value = self.term()
        while (tok := self.peek()) is not None and tok[0] in "+-":
            self.i += 1
            rhs = self.term()
            value = value + rhs if tok[0] == "+" else value - rhs
        return value

    def term(self):
        value = self.unary()
        while (tok := self.peek()) is not None and tok[0] in "*/":
            self.i += 1
            rhs_tok = self.peek()
            rhs = self.unary()
            if tok[0] == "*":
                value = value * rhs
            elif self.ring.allow_general_division:
                if rhs.is_zero():
                    self.error("division by zero", rhs_tok)
                value = value / rhs
            else:
                if not self.ring.is_const(rhs):
                    self.error("division by a non-constant", rhs_tok)
                c = self.ring.const_value(rhs)
                if c == 0:
                    self.error("division by zero", rhs_tok)
                value = value * (1 / Fraction(c))
        return value

    def unary(self):
        tok = self.peek()
        if tok is not None and tok[0] in "+-":
            self.i += 1
            v = self.unary()
            return -v if tok[0] == "-" else v
        return self.power()

    def power(self):
        base = self.atom()
        tok = self.peek()
        if tok is not None and tok[0] == "^":
            self.i += 1
            e = self.exponent()
            if e < 0 and not self.ring.allow_negative_powers:
                self.error("negative exponent", tok)
            return base**e
        return base

    def exponent(self):
        tok = self.peek()
        if tok is None:
            self.error("missing exponent")
        if tok[0] == "num":
            self.i += 1
            return tok[1]
        if tok[0] == "(":
            self.i += 1
            sign = 1
            nxt = self.peek()
            if nxt is not None and nxt[0] in "+-":
                self.i += 1
                sign = -1 if nxt[0] == "-" else 1
            num = self.peek()
            if num is None:
                self.error("unclosed '('", tok)
            if num[0] != "num":
                self.error("exponent must be an integer", num)
            self.i += 1
            close = self.peek()
            if close is None:
                self.error("unclosed '('", tok)
            if close[0] != ")":
                self.error("expected ')'", close)
            self.i += 1
            return sign * num[1]
        self.error("exponent must be an integer", tok)

    def atom(self):
        tok = self.peek()
        if tok is None:
            self.error("unexpected end of input")
        if tok[0] == "num":
            self.i += 1
            return self.ring.const(tok[1])
        if tok[0] == "var":
            self.i += 1
            make = self.ring.names.get(tok[1])
            if make is None:
                raise UnknownVariable(f"unknown variable {tok[1]!r} at offset {tok[2]}")
            return make()
        if tok[0] == "(":
            self.i += 1
            inner = self.expr()
            close = self.peek()
            if close is None:
                self.error("unclosed '('", tok)
            if close[0] != ")":
                self.error("expected ')'", close)
            self.i += 1
            return inner
        self.error(f"unexpected {tok[1]!r}", tok)


def _variables(text):
    return {tok[1] for tok in tokenize(text) if tok[0] == "var"}


def parse_bipoly(text):
    return _Parser(text, _BiRing()).parse()


def parse_uni(text, var="t"):
    return _Parser(text, _UniRing(var)).parse()


def parse_rational(text, var=None):
    """Rational function in one variable (``t`` or ``T`` unless given)."""
    if var is None:
        names = _variables(text)
        var = "T" if "T" in names and "t" not in names else "t"
    return _Parser(text, _RatRing(var)).parse()


def parse_poly(text):
    """Parse a polynomial: BiPoly in x, y; or UniPoly when the text uses only t (or T)."""
    names = _variables(text)
    if names and names <= {"t"}:
        return parse_uni(text, "t")
    if names and names <= {"T"}:
        return parse_uni(text, "T")
    return parse_bipoly(text)
