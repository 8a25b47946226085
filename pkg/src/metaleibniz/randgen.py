"""Seeded random generators for elements, expressions and symmetric data."""

from __future__ import annotations

import random
from fractions import Fraction

from .element import LeibnizElement, right_act
from .expr import Bracket, BracketExpr, Generator, RightAdj, Scaled, Sum
from .invariants import SymmetricData, orbit_sums
from .maps import ann_constructor
from .poly import CommPoly


def rand_coef(rng: random.Random) -> Fraction:
    num = rng.choice([-3, -2, -1, 1, 1, 2, 3, 5])
    den = rng.choice([1, 1, 1, 2, 3])
    return Fraction(num, den)


def rand_poly(rng: random.Random, n: int, max_deg: int, max_terms: int = 3) -> CommPoly:
    terms = {}
    for _ in range(rng.randint(1, max_terms)):
        d = rng.randint(0, max_deg)
        m = [0] * n
        for _ in range(d):
            m[rng.randrange(n)] += 1
        terms[tuple(m)] = rand_coef(rng)
    return CommPoly(n, terms)


def rand_commutator(rng: random.Random, n: int, max_deg: int = 4, max_entries: int = 3) -> LeibnizElement:
    """Random element of ``L_n'`` of degree at most ``max_deg`` (at least 2)."""
    quad = {}
    for _ in range(rng.randint(1, max_entries)):
        key = (rng.randint(1, n), rng.randint(1, n))
        quad[key] = rand_poly(rng, n, max(max_deg - 2, 0))
    return LeibnizElement(n, None, quad)


def rand_element(rng: random.Random, n: int, max_deg: int = 4, p_linear: float = 0.8) -> LeibnizElement:
    lin = [0] * n
    if rng.random() < p_linear:
        for _ in range(rng.randint(1, n)):
            lin[rng.randrange(n)] = rand_coef(rng)
    if max_deg < 2:
        return LeibnizElement(n, lin)
    return LeibnizElement(n, lin) + rand_commutator(rng, n, max_deg)


def rand_A(rng: random.Random, n: int, max_deg: int = 4) -> LeibnizElement:
    quad = {(i, i): rand_poly(rng, n, max_deg - 2) for i in range(1, n + 1) if rng.random() < 0.7}
    return LeibnizElement(n, None, quad)


def rand_B(rng: random.Random, n: int, max_deg: int = 4) -> LeibnizElement:
    quad = {}
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            if i != j and rng.random() < 0.5:
                quad[(i, j)] = rand_poly(rng, n, max_deg - 2)
    return LeibnizElement(n, None, quad)


def rand_invariant_poly(rng: random.Random, n: int, fixed: int, max_deg: int) -> CommPoly:
    """Random combination of orbit sums under the stabilizer of ``1..fixed``."""
    out = CommPoly.zero(n)
    for _ in range(rng.randint(0, 3)):
        d = rng.randint(0, max(max_deg, 0))
        orbits = orbit_sums(n, d, min(fixed, n))
        out = out + rng.choice(orbits).scale(rand_coef(rng))
    return out


def rand_symmetric_data(rng: random.Random, n: int, max_deg: int = 4, alpha: bool = True) -> SymmetricData:
    a = rand_coef(rng) if alpha and rng.random() < 0.5 else 0
    f = rand_invariant_poly(rng, n, 1, max_deg - 2)
    g = rand_invariant_poly(rng, n, 2, max_deg - 2) if n >= 2 else CommPoly.zero(n)
    return SymmetricData(n, a, f, g)


def rand_ann(rng: random.Random, n: int, max_deg: int = 4) -> LeibnizElement:
    """Random combination of squares and symmetric sums, times polynomials."""
    out = LeibnizElement.zero(n)
    for _ in range(rng.randint(1, 3)):
        v = rand_element(rng, n, 2)
        if rng.random() < 0.5:
            t = ann_constructor("square", v)
        else:
            t = ann_constructor("sym_sum", v, rand_element(rng, n, 2))
        if t and rng.random() < 0.5:
            t = right_act(t, rand_poly(rng, n, max(max_deg - 3, 0), 2))
        out = out + t.scale(rand_coef(rng))
    return out


def rand_expr(rng: random.Random, n: int, depth: int = 3) -> BracketExpr:
    if depth <= 0 or rng.random() < 0.3:
        return Generator(rng.randint(1, n))
    k = rng.random()
    if k < 0.5:
        return Bracket(rand_expr(rng, n, depth - 1), rand_expr(rng, n, depth - 1))
    if k < 0.65:
        return RightAdj(rand_expr(rng, n, depth - 1), rng.randint(1, n))
    if k < 0.85:
        return Sum((rand_expr(rng, n, depth - 1), rand_expr(rng, n, depth - 1)))
    return Scaled(rand_coef(rng), rand_expr(rng, n, depth - 1))


def _neg(e):
    return Scaled(Fraction(-1), e)


def _rewrite_here(rng: random.Random, e: BracketExpr, n: int) -> BracketExpr:
    """One identity-preserving rewrite at the root of ``e``."""
    if isinstance(e, Bracket):
        x, y = e.left, e.right
        choice = rng.random()
        if isinstance(y, Bracket) and choice < 0.4:
            # [x,[y,z]] = [[x,y],z] - [[x,z],y]
            return Sum((Bracket(Bracket(x, y.left), y.right), _neg(Bracket(Bracket(x, y.right), y.left))))
        if isinstance(x, Bracket) and choice < 0.7:
            # [[x,y],z] = [[x,z],y] + [x,[y,z]]
            a, b = x.left, x.right
            return Sum((Bracket(Bracket(a, y), b), Bracket(a, Bracket(b, y))))
        # [x,y] = [x+y,x+y] - [x,x] - [y,y] - [y,x]
        s = Sum((x, y))
        return Sum((Bracket(s, s), _neg(Bracket(x, x)), _neg(Bracket(y, y)), _neg(Bracket(y, x))))
    if isinstance(e, RightAdj):
        return Bracket(e.expr, Generator(e.index))
    # add a vanishing metabelian term
    i, j, k, m = (rng.randint(1, n) for _ in range(4))
    zero = Bracket(Bracket(Generator(i), Generator(j)), Bracket(Generator(k), Generator(m)))
    return Sum((e, Scaled(rand_coef(rng), zero)))


def _rewrite_somewhere(rng: random.Random, e: BracketExpr, n: int) -> BracketExpr:
    if rng.random() < 0.35:
        return _rewrite_here(rng, e, n)
    if isinstance(e, Bracket):
        if rng.random() < 0.5:
            return Bracket(_rewrite_somewhere(rng, e.left, n), e.right)
        return Bracket(e.left, _rewrite_somewhere(rng, e.right, n))
    if isinstance(e, RightAdj):
        return RightAdj(_rewrite_somewhere(rng, e.expr, n), e.index)
    if isinstance(e, Scaled):
        return Scaled(e.coef, _rewrite_somewhere(rng, e.expr, n))
    if isinstance(e, Sum):
        k = rng.randrange(len(e.terms))
        terms = list(e.terms)
        terms[k] = _rewrite_somewhere(rng, terms[k], n)
        return Sum(tuple(terms))
    return _rewrite_here(rng, e, n)


def equivalent_pair(rng: random.Random, n: int, depth: int = 3, steps: int = 3) -> tuple:
    """An expression and a rewritten form equal modulo the defining identities."""
    e = rand_expr(rng, n, depth)
    f = e
    for _ in range(steps):
        f = _rewrite_somewhere(rng, f, n)
    return e, f

