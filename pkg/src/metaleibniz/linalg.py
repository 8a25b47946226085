"""Exact linear algebra on homogeneous components of ``L_n``."""

from __future__ import annotations

from fractions import Fraction
from math import comb

from . import kernels
from .element import LeibnizElement, degree_component
from .poly import CommPoly, all_monomials


def component_dimension(n: int, d: int) -> int:
    if d == 1:
        return n
    return n * n * comb(n + d - 3, d - 2)


def component_basis(n: int, d: int) -> list:
    """Coordinates of the degree-``d`` component.

    Degree 1 uses keys ``i`` (for ``x_i``); higher degrees use
    ``((i, j), monomial)`` for ``[x_i, x_j] * monomial``.
    """
    if d == 1:
        return list(range(1, n + 1))
    monos = list(all_monomials(n, d - 2))
    return [((i, j), m) for i in range(1, n + 1) for j in range(1, n + 1) for m in monos]


def basis_element(key, n: int) -> LeibnizElement:
    if isinstance(key, int):
        lin = [0] * n
        lin[key - 1] = 1
        return LeibnizElement(n, lin)
    pair, m = key
    return LeibnizElement(n, None, {pair: CommPoly.monomial(m)})


def to_vector(u: LeibnizElement, d: int, index: dict | None = None) -> list:
    """Coordinates of the degree-``d`` part of ``u``."""
    n = u.n
    if index is None:
        index = {k: c for c, k in enumerate(component_basis(n, d))}
    vec = [Fraction(0)] * len(index)
    if d == 1:
        for i, c in enumerate(u.linear, 1):
            vec[index[i]] = c
        return vec
    for pair, p in degree_component(u, d).quad_items():
        for m, c in p.terms.items():
            vec[index[(pair, m)]] = c
    return vec


def from_vector(vec, n: int, d: int) -> LeibnizElement:
    basis = component_basis(n, d)
    if d == 1:
        return LeibnizElement(n, list(vec))
    quad: dict = {}
    for (pair, m), c in zip(basis, vec):
        if c:
            quad.setdefault(pair, {})[m] = c
    return LeibnizElement(n, None, {k: CommPoly(n, t) for k, t in quad.items()})


def rref(rows: list, ncols: int):
    return kernels.rref(rows, ncols)


def rank(rows: list, ncols: int) -> int:
    return len(kernels.rref(rows, ncols)[1])


def nullspace(rows: list, ncols: int) -> list:
    """Basis of ``{v : A v = 0}``, one vector per free column."""
    red, pivots = kernels.rref(rows, ncols)
    pivset = set(pivots)
    out = []
    for free in range(ncols):
        if free in pivset:
            continue
        v = [Fraction(0)] * ncols
        v[free] = Fraction(1)
        for row, pc in zip(red, pivots):
            v[pc] = -row[free]
        out.append(v)
    return out


def span_rank(elements: list, n: int, d: int) -> int:
    if not elements:
        return 0
    index = {k: c for c, k in enumerate(component_basis(n, d))}
    return rank([to_vector(u, d, index) for u in elements], len(index))


def same_span(first: list, second: list, n: int, d: int) -> bool:
    """Mutual containment of two spans inside the degree-``d`` component."""
    r1 = span_rank(first, n, d)
    r2 = span_rank(second, n, d)
    return r1 == r2 == span_rank(list(first) + list(second), n, d)
