"""Annihilator membership and inner automorphisms ``psi_u = 1 + ad u``."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .element import LeibnizElement, bracket, elem_act, generator
from .errors import CriterionError, NotInCommutatorIdealError, RankMismatchError
from .invariants import SymmetricData, is_symmetric, orbit_sums, symmetrize, synthesize, transpositions_1k
from .poly import CommPoly


def is_in_annihilator(u: LeibnizElement) -> bool:
    """True iff ``u`` lies in ``L_n'`` and ``[x_m, u] = 0`` for every generator.

    On ``L_n'`` this is the same as ``ad u = 0`` on all of ``L_n``, since
    two commutator-ideal elements always bracket to zero.
    """
    if u.has_linear_part():
        return False
    return all(not bracket(generator(m, u.n), u) for m in range(1, u.n + 1))


def ann_constructor(kind: str, v: LeibnizElement, w: LeibnizElement | None = None) -> LeibnizElement:
    """``[v, v]`` (kind ``square``) or ``[v, w] + [w, v]`` (kind ``sym_sum``)."""
    if kind == "square":
        return bracket(v, v)
    if kind == "sym_sum":
        if w is None:
            raise ValueError("sym_sum needs two elements")
        return bracket(v, w) + bracket(w, v)
    raise ValueError(f"unknown annihilator constructor {kind!r}")


@dataclass(frozen=True)
class InnerAuto:
    """Inner automorphism ``v -> v + [v, u]`` for ``u`` in the commutator ideal."""

    u: LeibnizElement

    def __post_init__(self):
        if self.u.has_linear_part():
            raise NotInCommutatorIdealError("ad u is only nilpotent for u in L_n'")

    @property
    def n(self) -> int:
        return self.u.n

    def __call__(self, v: LeibnizElement) -> LeibnizElement:
        return inner_apply(self, v)

    def __matmul__(self, other: "InnerAuto") -> "InnerAuto":
        return inner_compose(self, other)

    def inverse(self) -> "InnerAuto":
        return inner_inverse(self)

    def is_identity(self) -> bool:
        return is_in_annihilator(self.u)


def inner_make(u: LeibnizElement) -> InnerAuto:
    return InnerAuto(u)


def inner_apply(psi: InnerAuto, v: LeibnizElement) -> LeibnizElement:
    if psi.n != v.n:
        raise RankMismatchError(f"rank {psi.n} != rank {v.n}")
    return v + bracket(v, psi.u)


def inner_compose(psi1: InnerAuto, psi2: InnerAuto) -> InnerAuto:
    """``psi_{u1} psi_{u2} = psi_{u1 + u2}``."""
    if psi1.n != psi2.n:
        raise RankMismatchError(f"rank {psi1.n} != rank {psi2.n}")
    return InnerAuto(psi1.u + psi2.u)


def inner_inverse(psi: InnerAuto) -> InnerAuto:
    return InnerAuto(-psi.u)


def _require_commutator(u: LeibnizElement) -> None:
    if u.has_linear_part():
        raise NotInCommutatorIdealError("u must lie in the commutator ideal")


def preserves_symmetric(u: LeibnizElement) -> bool:
    """Whether ``psi_u`` maps symmetric elements to symmetric elements.

    Holds iff ``u - (1k) u`` is in the annihilator for ``k = 2..n``, i.e.
    ``u`` is an annihilator element plus a symmetric one.
    """
    _require_commutator(u)
    return all(is_in_annihilator(u - elem_act(s, u)) for s in transpositions_1k(u.n))


def decompose_preserving(u: LeibnizElement) -> tuple:
    """Split ``u = u_ann + u_sym`` with ``u_sym`` the orbit average of ``u``."""
    _require_commutator(u)
    if not preserves_symmetric(u):
        raise CriterionError("psi_u does not preserve symmetric elements; no decomposition exists")
    u_sym = symmetrize(u)
    return u - u_sym, u_sym


def symmetric_candidates(n: int, max_degree: int = 3) -> Iterable[LeibnizElement]:
    """Low-degree symmetric elements, starting with ``x_1 + ... + x_n``."""
    zero = CommPoly.zero(n)
    yield synthesize(SymmetricData(n, 1, zero, zero))
    for deg in range(0, max(max_degree - 1, 0)):
        for f in orbit_sums(n, deg, 1):
            yield synthesize(SymmetricData(n, 0, f, zero))
        if n >= 2:
            for g in orbit_sums(n, deg, 2):
                yield synthesize(SymmetricData(n, 0, zero, g))


def find_symmetry_witness(u: LeibnizElement, max_degree: int = 3) -> LeibnizElement | None:
    """A symmetric ``s`` with ``psi_u(s)`` not symmetric, or ``None``."""
    psi = InnerAuto(u)
    for s in symmetric_candidates(u.n, max_degree):
        if not is_symmetric(inner_apply(psi, s)):
            return s
    return None
