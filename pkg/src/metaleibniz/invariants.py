"""Symmetric polynomials of ``L_n``: tests, projection, parametrization.

A symmetric element is determined by three pieces of data: the common
coefficient ``alpha`` of the generators, the coefficient ``f`` of
``[x_1, x_1]`` and the coefficient ``g`` of ``[x_1, x_2]``. Every other
coefficient is a permuted copy of ``f``, ``g`` or ``h = (12) g``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import permutations
from math import factorial

from .element import LeibnizElement, elem_act
from .errors import ConstraintError, CostBoundError, NotSymmetricError, SubmoduleError
from .linalg import basis_element, component_basis, component_dimension, nullspace, from_vector, to_vector
from .poly import CommPoly, Permutation, all_monomials, is_fixed_by, poly_act, stabilizer_generators
from .render import dumps, poly_from_json, poly_to_json
from .poly import format_rational

SYMMETRIZE_MAX_N = 6
ORACLE_MAX_DIM = 4000


def _t(i: int, j: int, n: int) -> Permutation:
    # (ii) reads as the identity
    if i == j:
        return Permutation.identity(n)
    return Permutation.transposition(i, j, n)


def transpositions_1k(n: int) -> list:
    return [Permutation.transposition(1, k, n) for k in range(2, n + 1)]


def is_symmetric(u: LeibnizElement) -> bool:
    """Fixed by every ``(1k)``; these transpositions generate S_n."""
    return all(elem_act(s, u) == u for s in transpositions_1k(u.n))


def symmetrize(u: LeibnizElement, max_n: int = SYMMETRIZE_MAX_N) -> LeibnizElement:
    """Orbit average ``(1/n!) sum_sigma sigma(u)``; a projection onto the invariants."""
    n = u.n
    if n > max_n:
        raise CostBoundError(f"symmetrize over S_{n} exceeds bound n <= {max_n}")
    acc = LeibnizElement.zero(n)
    for imgs in permutations(range(1, n + 1)):
        acc = acc + elem_act(Permutation(imgs), u)
    return acc.scale(Fraction(1, factorial(n)))


def _require_A(u: LeibnizElement) -> None:
    if u.has_linear_part() or any(i != j for i, j in u.quad):
        raise SubmoduleError("element is not in the diagonal submodule A_n")


def _require_B(u: LeibnizElement) -> None:
    if u.has_linear_part() or any(i == j for i, j in u.quad):
        raise SubmoduleError("element is not in the off-diagonal submodule B_n")


def theorem_A_check(u: LeibnizElement) -> bool:
    """Criterion for ``sum a_i p_i``: ``p_1`` fixed by the stabilizer of 1, ``p_i = (1i) p_1``."""
    _require_A(u)
    n = u.n
    p1 = u.quad_entry(1, 1)
    if not is_fixed_by(p1, stabilizer_generators({1}, n)):
        return False
    return all(u.quad_entry(i, i) == poly_act(_t(1, i, n), p1) for i in range(2, n + 1))


def relation_permutation(i: int, j: int, n: int) -> tuple:
    """``(source, sigma)`` with ``q_ij = sigma q_source`` for symmetric ``q``.

    ``source`` is ``(1, 2)`` or ``(2, 1)``.
    """
    if (i, j) == (1, 2):
        return (1, 2), Permutation.identity(n)
    if (i, j) == (2, 1):
        return (2, 1), Permutation.identity(n)
    if i == 1:
        return (1, 2), _t(2, j, n)
    if j == 2:
        return (1, 2), _t(1, i, n)
    if i == 2:
        return (2, 1), _t(1, j, n)
    if j == 1:
        return (2, 1), _t(2, i, n)
    return (1, 2), _t(1, i, n) * _t(2, j, n)


def theorem_B_check(u: LeibnizElement) -> bool:
    """Criterion for ``sum b_ij q_ij``: relations to ``q_12`` plus stabilizer invariance."""
    _require_B(u)
    n = u.n
    if n == 1:
        return True
    q12 = u.quad_entry(1, 2)
    if not is_fixed_by(q12, stabilizer_generators({1, 2}, n)):
        return False
    q21 = poly_act(_t(1, 2, n), q12)
    if u.quad_entry(2, 1) != q21:
        return False
    src = {(1, 2): q12, (2, 1): q21}
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            if i == j or (i, j) in src:
                continue
            base, sigma = relation_permutation(i, j, n)
            if u.quad_entry(i, j) != poly_act(sigma, src[base]):
                return False
    return True


@dataclass(frozen=True)
class SymmetricData:
    """Parameters ``(alpha, f, g)`` of a symmetric element of ``L_n``."""

    n: int
    alpha: Fraction
    f: CommPoly
    g: CommPoly

    def __post_init__(self):
        object.__setattr__(self, "alpha", Fraction(self.alpha))
        n = self.n
        for name in ("f", "g"):
            p = getattr(self, name)
            if not isinstance(p, CommPoly):
                object.__setattr__(self, name, CommPoly.const(p, n))
            elif p.n != n:
                raise ConstraintError(f"{name} has rank {p.n}, expected {n}")
        if not is_fixed_by(self.f, stabilizer_generators({1}, n)):
            raise ConstraintError("f must be fixed by the stabilizer of 1")
        if n == 1 and self.g:
            raise ConstraintError("g must vanish for n = 1")
        if n >= 2 and not is_fixed_by(self.g, stabilizer_generators({1, 2}, n)):
            raise ConstraintError("g must be fixed by the stabilizer of 1 and 2")

    @property
    def h(self) -> CommPoly:
        if self.n < 2:
            return CommPoly.zero(self.n)
        return poly_act(_t(1, 2, self.n), self.g)

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "alpha": format_rational(self.alpha),
            "f": poly_to_json(self.f),
            "g": poly_to_json(self.g),
        }

    @classmethod
    def from_json(cls, data: dict) -> "SymmetricData":
        n = data["n"]
        return cls(n, Fraction(data["alpha"]), poly_from_json(data["f"], n), poly_from_json(data["g"], n))

    def dumps(self) -> str:
        return dumps(self.to_json())


def synthesize(d: SymmetricData) -> LeibnizElement:
    """Assemble the symmetric element with parameters ``d``."""
    n = d.n
    quad = {}
    for i in range(1, n + 1):
        quad[(i, i)] = poly_act(_t(1, i, n), d.f)
    if n >= 2:
        src = {(1, 2): d.g, (2, 1): d.h}
        for i in range(1, n + 1):
            for j in range(1, n + 1):
                if i != j:
                    base, sigma = relation_permutation(i, j, n)
                    quad[(i, j)] = poly_act(sigma, src[base])
    return LeibnizElement(n, [d.alpha] * n, quad)


def decompose_symmetric(u: LeibnizElement) -> SymmetricData:
    """Read ``(alpha, f, g)`` off ``u`` and verify by full reconstruction."""
    n = u.n
    g = u.quad_entry(1, 2) if n >= 2 else CommPoly.zero(n)
    try:
        d = SymmetricData(n, u.linear[0], u.quad_entry(1, 1), g)
    except ConstraintError as exc:
        raise NotSymmetricError(f"not symmetric: {exc}") from None
    rebuilt = synthesize(d)
    if rebuilt != u:
        if rebuilt.linear != u.linear:
            raise NotSymmetricError("not symmetric: linear coefficients differ")
        for key in sorted(set(u.quad) | set(rebuilt.quad)):
            if u.quad_entry(*key) != rebuilt.quad_entry(*key):
                i, j = key
                raise NotSymmetricError(
                    f"not symmetric: entry [x{i},x{j}] is {u.quad_entry(i, j)}, "
                    f"expected {rebuilt.quad_entry(i, j)}"
                )
    return d


def orbit_sums(n: int, deg: int, fixed: int) -> list:
    """Sums over orbits of degree-``deg`` monomials under the stabilizer of ``1..fixed``."""
    reps = {}
    for m in all_monomials(n, deg):
        key = m[:fixed] + tuple(sorted(m[fixed:], reverse=True))
        reps.setdefault(key, set()).add(m)
    return [CommPoly(n, {m: 1 for m in orbit}) for _, orbit in sorted(reps.items(), reverse=True)]


def synthesized_generators(n: int, d: int) -> list:
    """Spanning set of the degree-``d`` symmetric elements built by :func:`synthesize`."""
    zero = CommPoly.zero(n)
    if d == 1:
        return [synthesize(SymmetricData(n, 1, zero, zero))]
    out = [synthesize(SymmetricData(n, 0, f, zero)) for f in orbit_sums(n, d - 2, 1)]
    if n >= 2:
        out += [synthesize(SymmetricData(n, 0, zero, g)) for g in orbit_sums(n, d - 2, 2)]
    return out


def invariant_basis_oracle(n: int, d: int, max_dim: int = ORACLE_MAX_DIM) -> list:
    """Basis of the symmetric part of the degree-``d`` component by row reduction.

    Brute force: solves ``(1k) v = v`` for ``k = 2..n`` over the monomial
    basis of the component.
    """
    if n < 1 or d < 1:
        raise ValueError("need n >= 1 and d >= 1")
    dim = component_dimension(n, d)
    if dim > max_dim:
        raise CostBoundError(f"component of dimension {dim} exceeds bound {max_dim}")
    basis = component_basis(n, d)
    index = {k: c for c, k in enumerate(basis)}
    images = []
    for s in transpositions_1k(n):
        images.append([to_vector(elem_act(s, basis_element(k, n)), d, index) for k in basis])
    rows = []
    for img in images:
        # row r of (sigma - 1): column c holds img[c][r] - [r == c]
        for r in range(dim):
            rows.append([img[c][r] - (1 if r == c else 0) for c in range(dim)])
    return [from_vector(v, n, d) for v in nullspace(rows, dim)]
