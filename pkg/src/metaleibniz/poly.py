"""Exact polynomials in the adjoint variables ``r_1..r_n`` and the S_n action.

A :class:`CommPoly` is an immutable sparse map from exponent tuples to
nonzero :class:`fractions.Fraction` coefficients. Every value carries its
rank ``n`` and binary operations refuse to mix ranks.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from types import MappingProxyType
from typing import Iterable, Mapping

from . import kernels
from .errors import IndexRangeError, RankMismatchError

Monomial = tuple  # exponent vector, position i-1 holds the exponent of r_i


def monomial_degree(m: Monomial) -> int:
    return sum(m)


def grlex_key(m: Monomial):
    """Sort key putting monomials in descending graded-lex order."""
    return (-sum(m), tuple(-e for e in m))


def _check_rank(a: int, b: int) -> None:
    if a != b:
        raise RankMismatchError(f"rank {a} != rank {b}")


@dataclass(frozen=True)
class Permutation:
    """Bijection of ``{1..n}``; ``images[i-1]`` is the image of ``i``."""

    images: tuple

    def __post_init__(self):
        imgs = tuple(int(i) for i in self.images)
        if sorted(imgs) != list(range(1, len(imgs) + 1)):
            raise ValueError(f"not a permutation of 1..{len(imgs)}: {imgs}")
        object.__setattr__(self, "images", imgs)

    @property
    def n(self) -> int:
        return len(self.images)

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls(tuple(range(1, n + 1)))

    @classmethod
    def transposition(cls, i: int, j: int, n: int) -> "Permutation":
        if not (1 <= i <= n and 1 <= j <= n):
            raise IndexRangeError(f"transposition ({i}{j}) outside 1..{n}")
        imgs = list(range(1, n + 1))
        imgs[i - 1], imgs[j - 1] = j, i
        return cls(tuple(imgs))

    @classmethod
    def from_cycles(cls, cycles: Iterable[Iterable[int]], n: int) -> "Permutation":
        imgs = list(range(1, n + 1))
        for cyc in cycles:
            cyc = list(cyc)
            for a, b in zip(cyc, cyc[1:] + cyc[:1]):
                imgs[a - 1] = b
        return cls(tuple(imgs))

    def __call__(self, i: int) -> int:
        return self.images[i - 1]

    def __mul__(self, other: "Permutation") -> "Permutation":
        # (self * other)(i) = self(other(i))
        _check_rank(self.n, other.n)
        return Permutation(tuple(self.images[j - 1] for j in other.images))

    def inverse(self) -> "Permutation":
        inv = [0] * self.n
        for i, j in enumerate(self.images, 1):
            inv[j - 1] = i
        return Permutation(tuple(inv))

    def is_identity(self) -> bool:
        return all(j == i for i, j in enumerate(self.images, 1))

    def cycles(self) -> list:
        seen, out = set(), []
        for start in range(1, self.n + 1):
            if start in seen or self(start) == start:
                continue
            cyc, k = [], start
            while k not in seen:
                seen.add(k)
                cyc.append(k)
                k = self(k)
            out.append(tuple(cyc))
        return out

    def __str__(self) -> str:
        cycs = self.cycles()
        if not cycs:
            return "()"
        sep = "" if self.n < 10 else " "
        return "".join("(" + sep.join(map(str, c)) + ")" for c in cycs)

    def __repr__(self) -> str:
        return f"Permutation{self.images}"


class CommPoly:
    """Element of ``K[r_1..r_n]`` with exact rational coefficients."""

    __slots__ = ("n", "_terms", "_hash")

    def __init__(self, n: int, terms: Mapping | None = None):
        if n < 1:
            raise ValueError("rank must be at least 1")
        clean = {}
        for m, c in (terms or {}).items():
            m = tuple(int(e) for e in m)
            if len(m) != n or min(m, default=0) < 0:
                raise ValueError(f"bad exponent vector {m} for rank {n}")
            c = Fraction(c)
            if c:
                clean[m] = clean.get(m, 0) + c
        self.n = n
        self._terms = {m: c for m, c in clean.items() if c}
        self._hash = None

    @classmethod
    def _raw(cls, n: int, terms: dict) -> "CommPoly":
        # trusted constructor: terms already canonical
        p = object.__new__(cls)
        p.n = n
        p._terms = terms
        p._hash = None
        return p

    @classmethod
    def zero(cls, n: int) -> "CommPoly":
        return cls._raw(n, {})

    @classmethod
    def const(cls, c, n: int) -> "CommPoly":
        c = Fraction(c)
        return cls._raw(n, {(0,) * n: c} if c else {})

    @classmethod
    def one(cls, n: int) -> "CommPoly":
        return cls.const(1, n)

    @classmethod
    def var(cls, i: int, n: int) -> "CommPoly":
        if not 1 <= i <= n:
            raise IndexRangeError(f"r{i} outside r1..r{n}")
        e = [0] * n
        e[i - 1] = 1
        return cls._raw(n, {tuple(e): Fraction(1)})

    @classmethod
    def monomial(cls, exps, coef=1) -> "CommPoly":
        return cls(len(exps), {tuple(exps): coef})

    @property
    def terms(self) -> Mapping:
        return MappingProxyType(self._terms)

    def sorted_terms(self) -> list:
        return sorted(self._terms.items(), key=lambda t: grlex_key(t[0]))

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        return max((sum(m) for m in self._terms), default=-1)

    def homogeneous_part(self, d: int) -> "CommPoly":
        return CommPoly._raw(self.n, {m: c for m, c in self._terms.items() if sum(m) == d})

    def coefficient(self, m: Monomial) -> Fraction:
        return self._terms.get(tuple(m), Fraction(0))

    def __eq__(self, other):
        if isinstance(other, CommPoly):
            return self.n == other.n and self._terms == other._terms
        if isinstance(other, (int, Fraction)):
            return self == CommPoly.const(other, self.n)
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.n, frozenset(self._terms.items())))
        return self._hash

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = CommPoly.const(other, self.n)
        if not isinstance(other, CommPoly):
            return NotImplemented
        _check_rank(self.n, other.n)
        out = dict(self._terms)
        for m, c in other._terms.items():
            v = out.get(m, 0) + c
            if v:
                out[m] = v
            else:
                out.pop(m, None)
        return CommPoly._raw(self.n, out)

    __radd__ = __add__

    def __neg__(self):
        return CommPoly._raw(self.n, {m: -c for m, c in self._terms.items()})

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            other = CommPoly.const(other, self.n)
        if not isinstance(other, CommPoly):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, c) -> "CommPoly":
        c = Fraction(c)
        if not c:
            return CommPoly.zero(self.n)
        return CommPoly._raw(self.n, {m: c * v for m, v in self._terms.items()})

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        if not isinstance(other, CommPoly):
            return NotImplemented
        _check_rank(self.n, other.n)
        return CommPoly._raw(self.n, kernels.poly_mul(self._terms, other._terms))

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "CommPoly":
        out = CommPoly.one(self.n)
        for _ in range(k):
            out = out * self
        return out

    def act(self, sigma: Permutation) -> "CommPoly":
        return poly_act(sigma, self)

    def __repr__(self):
        return f"CommPoly({self.n}, {format_poly(self)!r})"

    def __str__(self):
        return format_poly(self)


def poly_act(sigma: Permutation, p: CommPoly) -> CommPoly:
    """Substitute ``r_i -> r_sigma(i)``: the exponent at ``i`` moves to ``sigma(i)``."""
    _check_rank(sigma.n, p.n)
    if sigma.is_identity() or not p:
        return p
    targets = tuple(j - 1 for j in sigma.images)
    return CommPoly._raw(p.n, kernels.poly_permute(p._terms, targets))


def symmetric_generator(kind: str, k: int, n: int) -> CommPoly:
    """Power sum ``r_1^k + ... + r_n^k`` or elementary symmetric ``e_k``."""
    if not 1 <= k <= n:
        raise ValueError(f"k={k} outside 1..{n}")
    terms = {}
    if kind == "power_sum":
        for i in range(n):
            e = [0] * n
            e[i] = k
            terms[tuple(e)] = Fraction(1)
    elif kind == "elementary":
        for idx in combinations(range(n), k):
            e = [0] * n
            for i in idx:
                e[i] = 1
            terms[tuple(e)] = Fraction(1)
    else:
        raise ValueError(f"unknown generator kind {kind!r}")
    return CommPoly._raw(n, terms)


def stabilizer_generators(fixed: Iterable[int], n: int) -> list:
    """Adjacent transpositions of the complement of ``fixed``.

    They generate the pointwise stabilizer of ``fixed`` in S_n.
    """
    fixed = set(fixed)
    if any(not 1 <= i <= n for i in fixed):
        raise IndexRangeError(f"fixed indices {sorted(fixed)} outside 1..{n}")
    rest = [i for i in range(1, n + 1) if i not in fixed]
    return [Permutation.transposition(a, b, n) for a, b in zip(rest, rest[1:])]


def coxeter_generators(n: int) -> list:
    return stabilizer_generators((), n)


def is_fixed_by(p: CommPoly, gens: Iterable[Permutation]) -> bool:
    return all(poly_act(s, p) == p for s in gens)


def all_monomials(n: int, d: int):
    """Exponent vectors of total degree ``d`` in descending graded-lex order."""
    if n == 1:
        yield (d,)
        return
    for first in range(d, -1, -1):
        for rest in all_monomials(n - 1, d - first):
            yield (first,) + rest


def format_rational(c: Fraction) -> str:
    c = Fraction(c)
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def format_monomial(m: Monomial) -> str:
    parts = []
    for i, e in enumerate(m, 1):
        if e == 1:
            parts.append(f"r{i}")
        elif e > 1:
            parts.append(f"r{i}^{e}")
    return "".join(parts)


def format_poly(p: CommPoly) -> str:
    """Text form, e.g. ``3/2*r1^2r2 - r3``; ``0`` for the zero polynomial."""
    if not p:
        return "0"
    out = []
    for k, (m, c) in enumerate(p.sorted_terms()):
        sign = "-" if c < 0 else "+"
        a = abs(c)
        mono = format_monomial(m)
        if not mono:
            body = format_rational(a)
        elif a == 1:
            body = mono
        else:
            body = f"{format_rational(a)}*{mono}"
        if k == 0:
            out.append(body if sign == "+" else "-" + body)
        else:
            out.append(f" {sign} {body}")
    return "".join(out)
