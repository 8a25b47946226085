"""Seeded property suites run by ``metaleibniz verify``.

Each check draws random cases from its own ``random.Random`` stream, so a
single check can be replayed from ``(seed, check name)`` alone.
"""

from __future__ import annotations

import random
import zlib
from dataclasses import dataclass
from typing import Callable

from .element import LeibnizElement, a_elem, b_elem, bracket, elem_act, generator, right_act
from .expr import normalize
from .invariants import (
    SymmetricData,
    decompose_symmetric,
    invariant_basis_oracle,
    is_symmetric,
    symmetrize,
    synthesize,
    synthesized_generators,
    theorem_A_check,
    theorem_B_check,
)
from .linalg import same_span
from .maps import (
    InnerAuto,
    decompose_preserving,
    find_symmetry_witness,
    inner_apply,
    inner_compose,
    inner_inverse,
    is_in_annihilator,
    preserves_symmetric,
)
from .parser import parse, parse_element
from .poly import CommPoly, Permutation
from .randgen import (
    equivalent_pair,
    rand_A,
    rand_B,
    rand_ann,
    rand_commutator,
    rand_element,
    rand_poly,
    rand_symmetric_data,
)
from .render import render_text


@dataclass
class CheckResult:
    suite: str
    name: str
    passed: int
    total: int
    counterexample: str | None = None

    @property
    def ok(self) -> bool:
        return self.passed == self.total

    def line(self) -> str:
        tag = "PASS" if self.ok else "FAIL"
        out = f"{tag} {self.suite}/{self.name}: {self.passed}/{self.total}"
        if self.counterexample:
            out += f"\n    first counterexample: {self.counterexample}"
        return out


@dataclass
class Params:
    cases: int = 100
    seed: int = 0
    max_n: int = 4
    max_deg: int = 4
    oracle_deg: int = 5


def _rng(params: Params, name: str) -> random.Random:
    return random.Random(params.seed * 1_000_003 + zlib.crc32(name.encode()))


def _run(suite: str, name: str, total: int, params: Params, case: Callable) -> CheckResult:
    """``case(rng)`` returns ``None`` on success or a counterexample description."""
    rng = _rng(params, name)
    passed, first = 0, None
    for _ in range(total):
        bad = case(rng)
        if bad is None:
            passed += 1
        elif first is None:
            first = bad
    return CheckResult(suite, name, passed, total, first)


def _n(rng, params, lo=2):
    return rng.randint(lo, max(lo, params.max_n))


def _s(*elems) -> str:
    return " | ".join(render_text(e) for e in elems)


# identities

def suite_identities(params: Params) -> list:
    S, C, D = "identities", params.cases, params.max_deg
    res = []

    def leibniz(rng):
        n = _n(rng, params)
        u, v, w = (rand_element(rng, n, D) for _ in range(3))
        lhs = bracket(bracket(u, v), w)
        rhs = bracket(bracket(u, w), v) + bracket(u, bracket(v, w))
        return None if lhs == rhs else _s(u, v, w)

    res.append(_run(S, "leibniz_identity", C, params, leibniz))

    def metabelian(rng):
        n = _n(rng, params)
        u, v, s, t = (rand_element(rng, n, D) for _ in range(4))
        return None if not bracket(bracket(u, v), bracket(s, t)) else _s(u, v, s, t)

    res.append(_run(S, "metabelian_identity", C, params, metabelian))

    def adjoint_form(rng):
        n = _n(rng, params)
        u, v = rand_element(rng, n, D), rand_element(rng, n, D)
        x = generator(rng.randint(1, n), n)
        lhs = bracket(bracket(u, v), x)
        rhs = bracket(bracket(u, x), v) + bracket(u, bracket(v, x))
        return None if lhs == rhs else _s(u, v, x)

    res.append(_run(S, "leibniz_adjoint_form", C, params, adjoint_form))

    def soundness(rng):
        n = _n(rng, params)
        e, f = equivalent_pair(rng, n)
        return None if normalize(e, n) == normalize(f, n) else f"{e!r} vs {f!r}"

    res.append(_run(S, "normal_form_soundness", C, params, soundness))

    examples = [
        ("[x1+x2, x1]", 2, a_elem(1, 2) + b_elem(2, 1, 2)),
        ("[[x1,x2],x3] - [[x1,x3],x2] - [x1,[x2,x3]]", 3, LeibnizElement.zero(3)),
        ("[x1,x2] + [x2,x1] - [x1+x2,x1+x2] + [x1,x1] + [x2,x2]", 2, LeibnizElement.zero(2)),
    ]
    it = iter(examples)

    def fixed_examples(rng):
        text, n, want = next(it)
        got = normalize(parse(text, n), n)
        return None if got == want else f"{text} -> {render_text(got)}"

    res.append(_run(S, "normalize_examples", len(examples), params, fixed_examples))

    def automorphism(rng):
        n = _n(rng, params)
        u, v = rand_element(rng, n, D), rand_element(rng, n, D)
        imgs = list(range(1, n + 1))
        rng.shuffle(imgs)
        s = Permutation(tuple(imgs))
        ok = elem_act(s, bracket(u, v)) == bracket(elem_act(s, u), elem_act(s, v))
        return None if ok else f"{s} on {_s(u, v)}"

    res.append(_run(S, "permutation_automorphism", C, params, automorphism))

    def module_action(rng):
        n = _n(rng, params)
        u = rand_commutator(rng, n, D)
        p, q = rand_poly(rng, n, 2), rand_poly(rng, n, 2)
        m = rng.randint(1, n)
        ok = right_act(u, p * q) == right_act(right_act(u, p), q)
        ok = ok and right_act(u, CommPoly.var(m, n)) == bracket(u, generator(m, n))
        return None if ok else f"{render_text(u)} by {p}, {q}"

    res.append(_run(S, "module_action", C, params, module_action))

    def roundtrip(rng):
        n = _n(rng, params, 1)
        u = rand_element(rng, n, D)
        back = parse_element(render_text(u), n)
        return None if back == u else render_text(u)

    res.append(_run(S, "render_roundtrip", C, params, roundtrip))
    return res


# theorems

def suite_theorems(params: Params) -> list:
    S, C, D = "theorems", params.cases, params.max_deg
    res = []

    def thm_a(rng):
        n = _n(rng, params)
        if rng.random() < 0.5:
            d = rand_symmetric_data(rng, n, D, alpha=False)
            u = synthesize(SymmetricData(n, 0, d.f, CommPoly.zero(n)))
            if rng.random() < 0.5:
                i = rng.randint(1, n)
                u = u + LeibnizElement(n, None, {(i, i): rand_poly(rng, n, D - 2, 1)})
        else:
            u = rand_A(rng, n, D)
        return None if is_symmetric(u) == theorem_A_check(u) else render_text(u)

    res.append(_run(S, "theorem_A_equivalence", C, params, thm_a))

    def thm_b(rng):
        n = _n(rng, params)
        if rng.random() < 0.5:
            d = rand_symmetric_data(rng, n, D, alpha=False)
            u = synthesize(SymmetricData(n, 0, CommPoly.zero(n), d.g))
            if rng.random() < 0.5:
                key = rng.choice([(i, j) for i in range(1, n + 1) for j in range(1, n + 1) if i != j])
                u = u + LeibnizElement(n, None, {key: rand_poly(rng, n, D - 2, 1)})
        else:
            u = rand_B(rng, n, D)
        return None if is_symmetric(u) == theorem_B_check(u) else render_text(u)

    res.append(_run(S, "theorem_B_equivalence", C, params, thm_b))

    def projection(rng):
        n = _n(rng, params, 1)
        u = rand_element(rng, n, D)
        s = symmetrize(u)
        ok = is_symmetric(s) and symmetrize(s) == s
        return None if ok else render_text(u)

    res.append(_run(S, "symmetrize_projection", C, params, projection))

    def roundtrip(rng):
        n = _n(rng, params, 1)
        d = rand_symmetric_data(rng, n, D)
        s = synthesize(d)
        ok = is_symmetric(s) and decompose_symmetric(s) == d and synthesize(decompose_symmetric(s)) == s
        return None if ok else d.dumps()

    res.append(_run(S, "symmetric_data_roundtrip", C, params, roundtrip))

    grid = [(n, d) for n in range(2, min(params.max_n, 3) + 1) for d in range(1, params.oracle_deg + 1)]
    git = iter(grid)

    def completeness(rng):
        n, d = next(git)
        oracle = invariant_basis_oracle(n, d)
        ok = same_span(oracle, synthesized_generators(n, d), n, d)
        return None if ok else f"n={n} d={d}"

    res.append(_run(S, "oracle_completeness", len(grid), params, completeness))

    def example(rng):
        n = 2
        f = CommPoly(2, {(2, 0): 1, (0, 1): 1})
        g = CommPoly(2, {(1, 1): 1, (0, 0): -3})
        d = SymmetricData(n, 0, f, g)
        s = synthesize(d)
        swap = Permutation((2, 1))
        template = LeibnizElement(
            2, None, {(1, 1): f, (2, 2): f.act(swap), (1, 2): g, (2, 1): g.act(swap)}
        )
        ok = decompose_symmetric(s) == d and s == template
        return None if ok else render_text(s)

    res.append(_run(S, "example_n2_roundtrip", 1, params, example))

    def annihilator(rng):
        n = _n(rng, params)
        i = rng.randint(1, n)
        u = right_act(a_elem(i, n), rand_poly(rng, n, D - 2))
        return None if is_in_annihilator(u) else render_text(u)

    res.append(_run(S, "diagonal_in_annihilator", C, params, annihilator))

    facts = [
        (parse_element("[x1,x2].r3 + [x2,x3].r1 + [x3,x1].r2", 3), True),
        (parse_element("[x1,x2] + [x2,x1]", 2), True),
        (parse_element("[x1+2*x2, x1+2*x2]", 2), True),
        (b_elem(1, 2, 2), False),
    ]
    fit = iter(facts)

    def ann_facts(rng):
        u, want = next(fit)
        return None if is_in_annihilator(u) == want else render_text(u)

    res.append(_run(S, "annihilator_facts", len(facts), params, ann_facts))
    return res


# inner automorphisms

def suite_inner(params: Params) -> list:
    S, C, D = "inner", params.cases, params.max_deg
    res = []

    def endo(rng):
        n = _n(rng, params)
        psi = InnerAuto(rand_commutator(rng, n, D))
        v, w = rand_element(rng, n, 3), rand_element(rng, n, 3)
        ok = inner_apply(psi, bracket(v, w)) == bracket(inner_apply(psi, v), inner_apply(psi, w))
        return None if ok else _s(psi.u, v, w)

    res.append(_run(S, "endomorphism_law", C, params, endo))

    def group(rng):
        n = _n(rng, params)
        p1, p2 = InnerAuto(rand_commutator(rng, n, D)), InnerAuto(rand_commutator(rng, n, D))
        v = rand_element(rng, n, D)
        comp = inner_compose(p1, p2)
        ok = comp.u == p1.u + p2.u
        ok = ok and inner_apply(comp, v) == inner_apply(p1, inner_apply(p2, v))
        ok = ok and inner_apply(inner_compose(p2, p1), v) == inner_apply(comp, v)
        ok = ok and inner_apply(inner_inverse(p1), inner_apply(p1, v)) == v
        return None if ok else _s(p1.u, p2.u, v)

    res.append(_run(S, "composition_inverse", C, params, group))

    def identity_iff_ann(rng):
        n = _n(rng, params)
        u = rand_ann(rng, n, D) if rng.random() < 0.5 else rand_commutator(rng, n, D)
        psi = InnerAuto(u)
        gens = [generator(m, n) for m in range(1, n + 1)]
        v = rand_element(rng, n, D)
        acts_trivially = all(inner_apply(psi, x) == x for x in gens) and inner_apply(psi, v) == v
        return None if acts_trivially == is_in_annihilator(u) else render_text(u)

    res.append(_run(S, "identity_iff_annihilator", C, params, identity_iff_ann))

    def forward(rng):
        n = _n(rng, params)
        u = rand_ann(rng, n, D) + synthesize(rand_symmetric_data(rng, n, D, alpha=False))
        if not preserves_symmetric(u):
            return "criterion rejects " + render_text(u)
        psi = InnerAuto(u)
        for _ in range(10):
            s = synthesize(rand_symmetric_data(rng, n, D))
            if not is_symmetric(inner_apply(psi, s)):
                return _s(u, s)
        u_ann, u_sym = decompose_preserving(u)
        if u_ann + u_sym != u or not is_in_annihilator(u_ann) or not is_symmetric(u_sym):
            return "decomposition " + render_text(u)
        return None

    res.append(_run(S, "preservation_forward", C, params, forward))

    def converse(rng):
        n = _n(rng, params)
        u = rand_commutator(rng, n, D)
        while preserves_symmetric(u):
            u = rand_commutator(rng, n, D)
        s = find_symmetry_witness(u)
        return None if s is not None else render_text(u)

    res.append(_run(S, "preservation_converse", C, params, converse))
    return res


SUITES = {"identities": suite_identities, "theorems": suite_theorems, "inner": suite_inner}


def run_suites(names, params: Params) -> list:
    if isinstance(names, str):
        names = list(SUITES) if names == "all" else [names]
    out = []
    for name in names:
        out.extend(SUITES[name](params))
    return out
