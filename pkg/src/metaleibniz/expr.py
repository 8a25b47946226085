"""Raw bracket expressions and their reduction to normal form."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .element import LeibnizElement, bracket, generator, right_act
from .errors import IndexRangeError
from .poly import CommPoly


class BracketExpr:
    """Base class of expression tree nodes."""

    __slots__ = ()


@dataclass(frozen=True)
class Zero(BracketExpr):
    pass


@dataclass(frozen=True)
class Generator(BracketExpr):
    index: int


@dataclass(frozen=True)
class Scaled(BracketExpr):
    coef: Fraction
    expr: BracketExpr


@dataclass(frozen=True)
class Sum(BracketExpr):
    terms: tuple


@dataclass(frozen=True)
class Bracket(BracketExpr):
    left: BracketExpr
    right: BracketExpr


@dataclass(frozen=True)
class RightAdj(BracketExpr):
    """``expr . r_index``, i.e. ``[expr, x_index]``."""

    expr: BracketExpr
    index: int


@dataclass(frozen=True)
class PolyAdj(BracketExpr):
    """``expr . (p)`` for a polynomial ``p`` in the adjoint variables."""

    expr: BracketExpr
    poly: CommPoly


def max_index(e: BracketExpr) -> int:
    if isinstance(e, Generator):
        return e.index
    if isinstance(e, RightAdj):
        return max(e.index, max_index(e.expr))
    if isinstance(e, PolyAdj):
        return max(e.poly.n, max_index(e.expr))
    if isinstance(e, Scaled):
        return max_index(e.expr)
    if isinstance(e, Sum):
        return max((max_index(t) for t in e.terms), default=0)
    if isinstance(e, Bracket):
        return max(max_index(e.left), max_index(e.right))
    return 0


def _apply_poly(u: LeibnizElement, p: CommPoly) -> LeibnizElement:
    # u.(p) for u with a linear part: expand p into monomials of r_i = ad x_i
    if not u.has_linear_part():
        return right_act(u, p)
    n = u.n
    out = LeibnizElement.zero(n)
    for m, c in p.terms.items():
        t = u
        for i, e in enumerate(m, 1):
            for _ in range(e):
                t = bracket(t, generator(i, n))
        out = out + t.scale(c)
    return out


def normalize(e: BracketExpr, n: int) -> LeibnizElement:
    """Value of ``e`` in ``L_n``, by structural recursion and bilinear expansion."""
    if isinstance(e, Generator):
        if not 1 <= e.index <= n:
            raise IndexRangeError(f"x{e.index} outside x1..x{n}")
        return generator(e.index, n)
    if isinstance(e, Zero):
        return LeibnizElement.zero(n)
    if isinstance(e, Scaled):
        return normalize(e.expr, n).scale(e.coef)
    if isinstance(e, Sum):
        out = LeibnizElement.zero(n)
        for t in e.terms:
            out = out + normalize(t, n)
        return out
    if isinstance(e, Bracket):
        return bracket(normalize(e.left, n), normalize(e.right, n))
    if isinstance(e, RightAdj):
        if not 1 <= e.index <= n:
            raise IndexRangeError(f"r{e.index} outside r1..r{n}")
        return bracket(normalize(e.expr, n), generator(e.index, n))
    if isinstance(e, PolyAdj):
        if e.poly.n != n:
            raise IndexRangeError(f"polynomial of rank {e.poly.n} used at rank {n}")
        return _apply_poly(normalize(e.expr, n), e.poly)
    raise TypeError(f"not a bracket expression: {e!r}")
