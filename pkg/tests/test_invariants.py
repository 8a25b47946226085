import json
import random
from fractions import Fraction

import jsonschema
import pytest

from metaleibniz import (
    CommPoly,
    LeibnizElement,
    Permutation,
    SymmetricData,
    decompose_symmetric,
    generator,
    invariant_basis_oracle,
    is_symmetric,
    parse_element,
    symmetrize,
    synthesize,
    theorem_A_check,
    theorem_B_check,
)
from metaleibniz import schemas
from metaleibniz.errors import ConstraintError, CostBoundError, NotSymmetricError, SubmoduleError
from metaleibniz.invariants import synthesized_generators
from metaleibniz.linalg import basis_element, component_basis, same_span, span_rank
from metaleibniz.parser import parse_poly
from metaleibniz.randgen import rand_A, rand_B, rand_element, rand_poly, rand_symmetric_data
from oracles import symmetric_by_enumeration

E = parse_element
P = parse_poly
SEEDS = range(30)


class TestIsSymmetric:
    @pytest.mark.parametrize("n", [1, 2, 3, 5])
    def test_sum_of_generators(self, n):
        s = LeibnizElement(n, [1] * n)
        assert is_symmetric(s)

    def test_b12(self):
        assert not is_symmetric(E("[x1,x2]", 2))

    def test_sum_of_squares(self):
        u = E("[x1,x1] + [x2,x2]", 2)
        assert is_symmetric(u) and symmetric_by_enumeration(u)

    @pytest.mark.parametrize("seed", SEEDS)
    def test_agrees_with_full_enumeration(self, seed):
        rng = random.Random(seed)
        n = rng.randint(1, 4)
        u = rand_element(rng, n, 4)
        if rng.random() < 0.5:
            u = symmetrize(u)
        assert is_symmetric(u) == symmetric_by_enumeration(u)


class TestSymmetrize:
    def test_b12(self):
        assert symmetrize(E("[x1,x2]", 2)) == E("1/2*[x1,x2] + 1/2*[x2,x1]", 2)

    def test_fixed_point(self):
        assert symmetrize(E("x1 + x2", 2)) == E("x1 + x2", 2)

    def test_orbit_of_x1(self):
        assert symmetrize(generator(1, 3)) == E("1/3*x1 + 1/3*x2 + 1/3*x3", 3)

    def test_cost_bound(self):
        with pytest.raises(CostBoundError):
            symmetrize(generator(1, 7))

    @pytest.mark.parametrize("seed", SEEDS)
    def test_projection(self, seed):
        rng = random.Random(seed)
        n = rng.randint(1, 4)
        u, v = rand_element(rng, n, 4), rand_element(rng, n, 4)
        s = symmetrize(u)
        assert is_symmetric(s)
        assert symmetrize(s) == s
        assert symmetrize(u + v.scale(3)) == s + symmetrize(v).scale(3)


class TestTheoremA:
    def test_example_true(self):
        assert theorem_A_check(E("[x1,x1].r2 + [x2,x2].r1", 2))

    def test_example_false(self):
        assert not theorem_A_check(E("[x1,x1].r2 + [x2,x2].r2", 2))

    def test_n3(self):
        # p1 = r2 + r3, p2 = (12) p1 = r1 + r3, p3 = (13) p1 = r2 + r1
        u = E("[x1,x1].(r2+r3) + [x2,x2].(r1+r3) + [x3,x3].(r1+r2)", 3)
        assert theorem_A_check(u) and is_symmetric(u)

    def test_rejects_outside_A(self):
        with pytest.raises(SubmoduleError):
            theorem_A_check(E("[x1,x2]", 2))
        with pytest.raises(SubmoduleError):
            theorem_A_check(E("x1 + [x1,x1]", 2))

    @pytest.mark.parametrize("seed", range(60))
    def test_equivalence(self, seed):
        rng = random.Random(seed)
        n = rng.randint(1, 4)
        u = rand_A(rng, n, 4)
        if seed % 2:
            u = LeibnizElement(n, None, {k: p for k, p in symmetrize(u).quad.items()})
        assert theorem_A_check(u) == symmetric_by_enumeration(u)


class TestTheoremB:
    def test_n2_any_g(self):
        rng = random.Random(1)
        for _ in range(10):
            g = rand_poly(rng, 2, 3)
            u = LeibnizElement(2, None, {(1, 2): g, (2, 1): g.act(Permutation((2, 1)))})
            assert theorem_B_check(u)

    def test_n2_false(self):
        assert not theorem_B_check(E("[x1,x2].r1 + [x2,x1].r1", 2))

    def test_n3_listed_relations(self):
        # q12 = r3, q21 = (12) r3 = r3, q13 = (23) q12 = r2, q31 = (23) q21 = r2,
        # q32 = (13) q12 = r1, q23 = (13) q21 = r1
        u = E("[x1,x2].r3 + [x2,x1].r3 + [x1,x3].r2 + [x3,x1].r2 + [x3,x2].r1 + [x2,x3].r1", 3)
        assert theorem_B_check(u)
        assert is_symmetric(u)

    def test_n4_pair_relation(self):
        # q_34 = (13)(24) q_12 with q_12 = r3 + r4 fixed by the stabilizer of 1, 2
        u = symmetrize(E("[x1,x2].(r3+r4)", 4))
        assert theorem_B_check(u)
        assert u.quad_entry(3, 4) == u.quad_entry(1, 2).act(
            Permutation((3, 4, 1, 2))
        )

    def test_rejects_outside_B(self):
        with pytest.raises(SubmoduleError):
            theorem_B_check(E("[x1,x1]", 2))

    @pytest.mark.parametrize("seed", range(60))
    def test_equivalence(self, seed):
        rng = random.Random(seed)
        n = rng.randint(2, 4)
        u = rand_B(rng, n, 4)
        if seed % 2:
            u = symmetrize(u)
        assert theorem_B_check(u) == symmetric_by_enumeration(u)


class TestCorollary:
    def test_decompose_linear(self):
        d = decompose_symmetric(E("3*x1 + 3*x2", 2))
        assert (d.alpha, d.f, d.g) == (3, CommPoly.zero(2), CommPoly.zero(2))

    def test_decompose_n2_template(self):
        f, g = P("r1^2 + r2", 2), P("r1r2 - 3", 2)
        sw = Permutation((2, 1))
        u = LeibnizElement(2, None, {(1, 1): f, (2, 2): f.act(sw), (1, 2): g, (2, 1): g.act(sw)})
        d = decompose_symmetric(u)
        assert (d.alpha, d.f, d.g) == (0, f, g)

    def test_decompose_symmetrized(self):
        u = symmetrize(E("[x1,x2].r3", 3))
        d = decompose_symmetric(u)
        assert d.alpha == 0 and d.f.is_zero() and d.g == u.quad_entry(1, 2)
        assert synthesize(d) == u

    def test_decompose_rejects(self):
        with pytest.raises(NotSymmetricError, match=r"\[x2,x1\]"):
            decompose_symmetric(E("[x1,x2]", 2))
        with pytest.raises(NotSymmetricError):
            decompose_symmetric(E("x1", 2))
        with pytest.raises(NotSymmetricError):
            decompose_symmetric(E("[x1,x1].r2", 3))

    def test_synthesize_linear(self):
        z = CommPoly.zero(3)
        assert synthesize(SymmetricData(3, 1, z, z)) == E("x1 + x2 + x3", 3)

    def test_synthesize_constant_f(self):
        assert synthesize(SymmetricData(2, 0, CommPoly.one(2), CommPoly.zero(2))) == E("[x1,x1] + [x2,x2]", 2)

    def test_synthesize_g_r3(self):
        s = synthesize(SymmetricData(3, 0, CommPoly.zero(3), CommPoly.var(3, 3)))
        assert is_symmetric(s) and symmetric_by_enumeration(s)

    def test_constraint_errors(self):
        with pytest.raises(ConstraintError):
            SymmetricData(3, 0, CommPoly.var(2, 3), CommPoly.zero(3))
        with pytest.raises(ConstraintError):
            SymmetricData(4, 0, CommPoly.zero(4), CommPoly.var(3, 4))
        with pytest.raises(ConstraintError):
            SymmetricData(1, 0, CommPoly.zero(1), CommPoly.one(1))

    def test_n1_everything_symmetric(self):
        u = E("2*x1 + [x1,x1].(r1^2 - 1)", 1)
        assert is_symmetric(u)
        d = decompose_symmetric(u)
        assert d.g.is_zero() and synthesize(d) == u

    def test_n2_any_g_admissible(self):
        rng = random.Random(9)
        for _ in range(10):
            SymmetricData(2, 0, CommPoly.zero(2), rand_poly(rng, 2, 3))

    @pytest.mark.parametrize("seed", SEEDS)
    def test_roundtrips(self, seed):
        rng = random.Random(seed)
        n = rng.randint(1, 5)
        d = rand_symmetric_data(rng, n, 5)
        s = synthesize(d)
        assert is_symmetric(s)
        assert decompose_symmetric(s) == d
        u = symmetrize(rand_element(rng, min(n, 4), 4))
        assert synthesize(decompose_symmetric(u)) == u

    def test_json_roundtrip_and_schema(self):
        d = SymmetricData(3, Fraction(-1, 2), P("r1^2 + r2r3", 3), P("r3 - 2", 3))
        doc = d.to_json()
        jsonschema.validate(doc, schemas.SYMMETRIC_DATA)
        assert SymmetricData.from_json(json.loads(d.dumps())) == d
        assert doc["f"][0] == {"coef": "1", "exps": [2, 0, 0]}


class TestOracle:
    def test_n2_d1(self):
        basis = invariant_basis_oracle(2, 1)
        assert len(basis) == 1 and same_span(basis, [E("x1 + x2", 2)], 2, 1)

    def test_n2_d2(self):
        basis = invariant_basis_oracle(2, 2)
        assert len(basis) == 2
        assert same_span(basis, [E("[x1,x1]+[x2,x2]", 2), E("[x1,x2]+[x2,x1]", 2)], 2, 2)

    def test_n2_d3(self):
        assert len(invariant_basis_oracle(2, 3)) == 4

    def test_all_symmetric(self):
        for n, d in [(1, 3), (2, 4), (3, 3), (4, 2)]:
            assert all(is_symmetric(u) for u in invariant_basis_oracle(n, d))

    def test_cost_bound(self):
        with pytest.raises(CostBoundError):
            invariant_basis_oracle(6, 8)

    @pytest.mark.parametrize("n", [1, 2, 3])
    @pytest.mark.parametrize("d", [1, 2, 3, 4])
    def test_dimension_matches_group_average(self, n, d):
        averaged = [symmetrize(basis_element(k, n)) for k in component_basis(n, d)]
        assert span_rank(averaged, n, d) == len(invariant_basis_oracle(n, d))

    @pytest.mark.parametrize("n", [2, 3])
    @pytest.mark.parametrize("d", [1, 2, 3, 4, 5])
    def test_completeness(self, n, d):
        assert same_span(invariant_basis_oracle(n, d), synthesized_generators(n, d), n, d)
