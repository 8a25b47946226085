from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from metaleibniz import _pykernels, kernels

try:
    from metaleibniz import _ckernels
except ImportError:  # extension not built
    _ckernels = None

BACKENDS = [_pykernels] + ([_ckernels] if _ckernels else [])

fracs = st.builds(Fraction, st.integers(-20, 20), st.integers(1, 6))
sparse = st.dictionaries(
    st.lists(st.integers(0, 3), min_size=3, max_size=3).map(tuple),
    fracs.filter(bool),
    max_size=6,
)


def naive_mul(a, b):
    out = {}
    for ea, ca in a.items():
        for eb, cb in b.items():
            e = tuple(x + y for x, y in zip(ea, eb))
            out[e] = out.get(e, 0) + ca * cb
    return {e: c for e, c in out.items() if c}


def naive_rank(rows):
    # plain Fraction Gaussian elimination
    rows = [list(map(Fraction, r)) for r in rows]
    r = 0
    ncols = len(rows[0]) if rows else 0
    for c in range(ncols):
        piv = next((k for k in range(r, len(rows)) if rows[k][c]), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        for k in range(r + 1, len(rows)):
            f = rows[k][c] / rows[r][c]
            rows[k] = [x - f * y for x, y in zip(rows[k], rows[r])]
        r += 1
    return r


def test_backend_selected():
    assert kernels.BACKEND in ("cython", "python")
    if _ckernels is not None:
        assert kernels.BACKEND == "cython"


@pytest.mark.parametrize("mod", BACKENDS, ids=lambda m: m.__name__.split(".")[-1])
@given(a=sparse, b=sparse)
def test_poly_mul_matches_naive(mod, a, b):
    assert mod.poly_mul(a, b) == naive_mul(a, b)


@pytest.mark.parametrize("mod", BACKENDS, ids=lambda m: m.__name__.split(".")[-1])
@given(a=sparse, perm=st.permutations([0, 1, 2]))
def test_poly_permute(mod, a, perm):
    out = mod.poly_permute(a, tuple(perm))
    for e, c in a.items():
        f = [0, 0, 0]
        for i in range(3):
            f[perm[i]] = e[i]
        assert out[tuple(f)] == c
    assert len(out) == len(a)


matrices = st.integers(1, 5).flatmap(
    lambda c: st.lists(st.lists(fracs, min_size=c, max_size=c), min_size=0, max_size=6).map(lambda rows: (rows, c))
)


@pytest.mark.parametrize("mod", BACKENDS, ids=lambda m: m.__name__.split(".")[-1])
@given(data=matrices)
def test_rref_properties(mod, data):
    rows, ncols = data
    red, piv = mod.rref(rows, ncols)
    assert len(piv) == len(red) == (naive_rank(rows) if rows else 0)
    for k, (row, c) in enumerate(zip(red, piv)):
        assert row[c] == 1
        assert all(red[j][c] == 0 for j in range(len(red)) if j != k)
        assert all(x == 0 for x in row[:c])
    assert piv == sorted(piv)


@pytest.mark.skipif(_ckernels is None, reason="extension not built")
@given(data=matrices, a=sparse, b=sparse)
def test_backends_agree(data, a, b):
    rows, ncols = data
    assert _ckernels.rref(rows, ncols) == _pykernels.rref(rows, ncols)
    assert _ckernels.poly_mul(a, b) == _pykernels.poly_mul(a, b)
