"""Normal forms in the free metabelian Leibniz algebra ``L_n``.

Every element is stored uniquely as

    sum_i c_i x_i  +  sum_{(i, j)} [x_i, x_j] * q_ij(r_1, ..., r_n)

where the pair ``(i, i)`` holds the coefficient of ``a_i = [x_i, x_i]`` and
``(i, j)``, ``i != j``, the coefficient of ``b_ij = [x_i, x_j]``. The
commutator ideal is a free right ``K[r_1..r_n]``-module on the ``[x_i, x_j]``,
so this representation is canonical.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Mapping

from .errors import IndexRangeError, NotInCommutatorIdealError, RankMismatchError
from .poly import CommPoly, Permutation, poly_act


def _check_rank(u, v):
    if u.n != v.n:
        raise RankMismatchError(f"rank {u.n} != rank {v.n}")


class LeibnizElement:
    __slots__ = ("n", "_linear", "_quad", "_hash")

    def __init__(self, n: int, linear=None, quad: Mapping | None = None):
        if n < 1:
            raise ValueError("rank must be at least 1")
        lin = tuple(Fraction(c) for c in (linear if linear is not None else (0,) * n))
        if len(lin) != n:
            raise RankMismatchError(f"linear part has {len(lin)} entries, rank is {n}")
        q = {}
        for (i, j), p in (quad or {}).items():
            if not (1 <= i <= n and 1 <= j <= n):
                raise IndexRangeError(f"quad entry ({i},{j}) outside 1..{n}")
            if not isinstance(p, CommPoly):
                p = CommPoly.const(p, n)
            if p.n != n:
                raise RankMismatchError(f"quad poly rank {p.n} != {n}")
            q[(i, j)] = p
        self.n = n
        self._linear = lin
        self._quad = {k: p for k, p in q.items() if p}
        self._hash = None

    @classmethod
    def _raw(cls, n, linear, quad):
        u = object.__new__(cls)
        u.n = n
        u._linear = linear
        u._quad = quad
        u._hash = None
        return u

    @classmethod
    def zero(cls, n: int) -> "LeibnizElement":
        return cls._raw(n, (Fraction(0),) * n, {})

    # read-only views

    @property
    def linear(self) -> tuple:
        return self._linear

    @property
    def quad(self) -> Mapping:
        return dict(self._quad)

    def quad_entry(self, i: int, j: int) -> CommPoly:
        return self._quad.get((i, j)) or CommPoly.zero(self.n)

    def quad_items(self) -> list:
        return sorted(self._quad.items())

    def has_linear_part(self) -> bool:
        return any(self._linear)

    def is_zero(self) -> bool:
        return not self._quad and not any(self._linear)

    def __bool__(self):
        return not self.is_zero()

    def commutator_part(self) -> "LeibnizElement":
        return LeibnizElement._raw(self.n, (Fraction(0),) * self.n, dict(self._quad))

    def linear_part(self) -> "LeibnizElement":
        return LeibnizElement._raw(self.n, self._linear, {})

    # vector space structure

    def __eq__(self, other):
        if not isinstance(other, LeibnizElement):
            return NotImplemented
        return self.n == other.n and self._linear == other._linear and self._quad == other._quad

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.n, self._linear, frozenset(self._quad.items())))
        return self._hash

    def __add__(self, other):
        if not isinstance(other, LeibnizElement):
            return NotImplemented
        _check_rank(self, other)
        lin = tuple(a + b for a, b in zip(self._linear, other._linear))
        quad = dict(self._quad)
        for k, p in other._quad.items():
            s = quad[k] + p if k in quad else p
            if s:
                quad[k] = s
            else:
                del quad[k]
        return LeibnizElement._raw(self.n, lin, quad)

    def __neg__(self):
        return LeibnizElement._raw(
            self.n, tuple(-c for c in self._linear), {k: -p for k, p in self._quad.items()}
        )

    def __sub__(self, other):
        if not isinstance(other, LeibnizElement):
            return NotImplemented
        return self + (-other)

    def scale(self, c) -> "LeibnizElement":
        c = Fraction(c)
        if not c:
            return LeibnizElement.zero(self.n)
        return LeibnizElement._raw(
            self.n, tuple(c * a for a in self._linear), {k: p.scale(c) for k, p in self._quad.items()}
        )

    def __mul__(self, other):
        # scalars scale; a CommPoly acts from the right on L_n'
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        if isinstance(other, CommPoly):
            return right_act(self, other)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return NotImplemented

    def __truediv__(self, c):
        return self.scale(1 / Fraction(c))

    def bracket(self, other: "LeibnizElement") -> "LeibnizElement":
        return bracket(self, other)

    def act(self, sigma: Permutation) -> "LeibnizElement":
        return elem_act(sigma, self)

    def degrees(self) -> list:
        ds = set()
        if any(self._linear):
            ds.add(1)
        for p in self._quad.values():
            ds.update(2 + sum(m) for m in p.terms)
        return sorted(ds)

    def __repr__(self):
        from .render import render_text

        return f"LeibnizElement({self.n}, {render_text(self)!r})"

    def __str__(self):
        from .render import render_text

        return render_text(self)


def generator(i: int, n: int) -> LeibnizElement:
    if not 1 <= i <= n:
        raise IndexRangeError(f"x{i} outside x1..x{n}")
    lin = [Fraction(0)] * n
    lin[i - 1] = Fraction(1)
    return LeibnizElement._raw(n, tuple(lin), {})


def quad_basis(i: int, j: int, n: int, p: CommPoly | None = None) -> LeibnizElement:
    """``[x_i, x_j] * p``; with ``p`` omitted, the module generator itself."""
    if not (1 <= i <= n and 1 <= j <= n):
        raise IndexRangeError(f"[x{i},x{j}] outside rank {n}")
    p = CommPoly.one(n) if p is None else p
    return LeibnizElement(n, None, {(i, j): p})


def a_elem(i: int, n: int) -> LeibnizElement:
    return quad_basis(i, i, n)


def b_elem(j: int, k: int, n: int) -> LeibnizElement:
    if j == k:
        raise ValueError("b_jk needs j != k; use a_elem for squares")
    return quad_basis(j, k, n)


def _add_into(quad: dict, key, p: CommPoly) -> None:
    if key in quad:
        s = quad[key] + p
        if s:
            quad[key] = s
        else:
            del quad[key]
    elif p:
        quad[key] = p


def left_adjoint_columns(u: LeibnizElement) -> dict:
    """Per-index coefficients ``C_j`` with ``[x_m, u] = sum_j b_mj C_j`` for every ``m``.

    Aggregates the rule ``[x_m, b_jk p] = (b_mj r_k - b_mk r_j) p`` over the
    quad part of ``u``: ``C_j = sum_k r_k (q_jk - q_kj)``. Diagonal entries
    cancel, which is why squares are killed by left multiplication.
    """
    n = u.n
    cols: dict = {}
    for (j, k), p in u._quad.items():
        if j == k:
            continue
        _add_into(cols, j, p * CommPoly.var(k, n))
        _add_into(cols, k, -(p * CommPoly.var(j, n)))
    return cols


def bracket(u: LeibnizElement, v: LeibnizElement) -> LeibnizElement:
    """The Leibniz product ``[u, v]`` in normal form.

    Rules, extended bilinearly:
      [x_i, x_j]          -> [x_i, x_j] * 1
      [[x_j, x_k] p, x_m] -> [x_j, x_k] p r_m
      [x_m, [x_j, x_k] p] -> ([x_m, x_j] r_k - [x_m, x_k] r_j) p
      [L', L']            -> 0
    """
    _check_rank(u, v)
    n = u.n
    quad: dict = {}
    ul, vl = u._linear, v._linear

    for i, ci in enumerate(ul, 1):
        if not ci:
            continue
        for j, dj in enumerate(vl, 1):
            if dj:
                _add_into(quad, (i, j), CommPoly.const(ci * dj, n))

    if any(vl) and u._quad:
        ad = CommPoly._raw(n, {})
        for m, dm in enumerate(vl, 1):
            if dm:
                ad = ad + CommPoly.var(m, n).scale(dm)
        for k, p in u._quad.items():
            _add_into(quad, k, p * ad)

    if any(ul) and v._quad:
        cols = left_adjoint_columns(v)
        for m, cm in enumerate(ul, 1):
            if not cm:
                continue
            for j, c in cols.items():
                _add_into(quad, (m, j), c.scale(cm))

    return LeibnizElement._raw(n, (Fraction(0),) * n, quad)


def right_act(u: LeibnizElement, p: CommPoly) -> LeibnizElement:
    """Module action of ``K[r_1..r_n]`` on the commutator ideal."""
    if u.has_linear_part():
        raise NotInCommutatorIdealError("right action needs an element of L_n'")
    if u.n != p.n:
        raise RankMismatchError(f"rank {u.n} != rank {p.n}")
    quad = {}
    for k, q in u._quad.items():
        _add_into(quad, k, q * p)
    return LeibnizElement._raw(u.n, u._linear, quad)


def elem_act(sigma: Permutation, u: LeibnizElement) -> LeibnizElement:
    """Substitute ``x_i -> x_sigma(i)``; an algebra automorphism of ``L_n``."""
    if sigma.n != u.n:
        raise RankMismatchError(f"rank {sigma.n} != rank {u.n}")
    if sigma.is_identity():
        return u
    lin = [Fraction(0)] * u.n
    for i, c in enumerate(u._linear, 1):
        lin[sigma(i) - 1] = c
    quad = {(sigma(i), sigma(j)): poly_act(sigma, p) for (i, j), p in u._quad.items()}
    return LeibnizElement._raw(u.n, tuple(lin), quad)


def degree_component(u: LeibnizElement, d: int) -> LeibnizElement:
    """Homogeneous part of degree ``d`` (``x_i`` has degree 1, ``[x_i,x_j] m`` degree ``2 + deg m``)."""
    if d < 1:
        raise ValueError("degree must be at least 1")
    n = u.n
    if d == 1:
        return LeibnizElement._raw(n, u._linear, {})
    quad = {}
    for k, p in u._quad.items():
        h = p.homogeneous_part(d - 2)
        if h:
            quad[k] = h
    return LeibnizElement._raw(n, (Fraction(0),) * n, quad)
