"""Recursive-descent parser for bracket expressions and polynomials.

Expression grammar (whitespace ignored)::

    expr     := [sign] term { sign term }
    term     := [rational "*"] factor { "." adj } | "0"
    factor   := "x" index | "[" expr "," expr "]" | "(" expr ")"
    adj      := "r" index | "(" poly ")"
    poly     := [sign] pterm { sign pterm }
    pterm    := rational [ "*" mono ] | mono
    mono     := "r" index [ "^" digits ] { ["*"] "r" index [ "^" digits ] }
    rational := digits [ "/" digits ]
"""

from __future__ import annotations

from fractions import Fraction

from .errors import ParseError
from .expr import Bracket, BracketExpr, Generator, PolyAdj, RightAdj, Scaled, Sum, Zero
from .poly import CommPoly


class _Parser:
    def __init__(self, text: str, n: int):
        self.text = text
        self.n = n
        self.pos = 0

    def error(self, msg, pos=None):
        raise ParseError(msg, self.text, self.pos if pos is None else pos)

    def skip(self):
        t = self.text
        while self.pos < len(t) and t[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        self.skip()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def eat(self, ch: str) -> bool:
        if self.peek() == ch:
            self.pos += 1
            return True
        return False

    def expect(self, ch: str):
        if not self.eat(ch):
            got = self.peek() or "end of input"
            self.error(f"expected {ch!r}, got {got!r}")

    def digits(self) -> int:
        self.skip()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if start == self.pos:
            self.error("expected digits")
        return int(self.text[start:self.pos])

    def index(self) -> int:
        start = self.pos
        i = self.digits()
        if not 1 <= i <= self.n:
            self.error(f"index {i} out of range 1..{self.n}", start)
        return i

    def rational(self) -> Fraction:
        num = self.digits()
        if self.eat("/"):
            start = self.pos
            den = self.digits()
            if den == 0:
                self.error("zero denominator", start)
            return Fraction(num, den)
        return Fraction(num)

    def sign(self):
        if self.eat("-"):
            return -1
        if self.eat("+"):
            return 1
        return None

    def finish(self):
        if self.peek():
            self.error(f"unexpected {self.peek()!r}")

    # expressions

    def expr(self) -> BracketExpr:
        terms = []
        terms.append(self.term(self.sign() or 1))
        while self.peek() in ("+", "-"):
            terms.append(self.term(self.sign()))
        return terms[0] if len(terms) == 1 else Sum(tuple(terms))

    def term(self, sign: int) -> BracketExpr:
        coef = Fraction(sign)
        explicit = False
        if self.peek().isdigit():
            start = self.pos
            c = self.rational()
            if not self.eat("*"):
                if c == 0:
                    return Zero()
                self.error("expected '*' after coefficient", start)
            coef *= c
            explicit = True
        node = self.factor()
        while self.eat("."):
            node = self.adj(node)
        if explicit or coef != 1:
            return Scaled(coef, node)
        return node

    def factor(self) -> BracketExpr:
        ch = self.peek()
        if ch == "x":
            self.pos += 1
            return Generator(self.index())
        if ch == "[":
            self.pos += 1
            left = self.expr()
            self.expect(",")
            right = self.expr()
            self.expect("]")
            return Bracket(left, right)
        if ch == "(":
            self.pos += 1
            inner = self.expr()
            self.expect(")")
            return inner
        self.error(f"expected generator, '[' or '(', got {ch or 'end of input'!r}")

    def adj(self, node: BracketExpr) -> BracketExpr:
        if self.eat("r"):
            return RightAdj(node, self.index())
        if self.eat("("):
            p = self.poly()
            self.expect(")")
            return PolyAdj(node, p)
        self.error("expected 'r<index>' or '(' after '.'")

    # polynomials

    def poly(self) -> CommPoly:
        n = self.n
        out = CommPoly.zero(n)
        s = self.sign() or 1
        out = out + self.pterm().scale(s)
        while self.peek() in ("+", "-"):
            s = self.sign()
            out = out + self.pterm().scale(s)
        return out

    def pterm(self) -> CommPoly:
        n = self.n
        if self.peek().isdigit():
            c = self.rational()
            if self.eat("*"):
                return self.mono().scale(c)
            return CommPoly.const(c, n)
        if self.peek() == "r":
            return self.mono()
        self.error(f"expected polynomial term, got {self.peek() or 'end of input'!r}")

    def mono(self) -> CommPoly:
        n = self.n
        exps = [0] * n
        self.expect("r")
        while True:
            i = self.index()
            e = self.digits() if self.eat("^") else 1
            exps[i - 1] += e
            save = self.pos
            if self.eat("*") and self.peek() != "r":
                self.pos = save
                break
            if not self.eat("r"):
                break
        return CommPoly.monomial(exps)


def parse(text: str, n: int) -> BracketExpr:
    """Parse an expression over ``x_1..x_n``; raises :class:`ParseError`."""
    p = _Parser(text, n)
    if not p.peek():
        p.error("empty expression")
    e = p.expr()
    p.finish()
    return e


def parse_poly(text: str, n: int) -> CommPoly:
    """Parse a polynomial such as ``3/2*r1^2r2 - r3``."""
    p = _Parser(text, n)
    out = p.poly()
    p.finish()
    return out


def parse_element(text: str, n: int):
    from .expr import normalize

    return normalize(parse(text, n), n)
