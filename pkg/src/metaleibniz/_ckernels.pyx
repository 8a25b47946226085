# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled hot kernels; mirrors ``_pykernels`` exactly."""

from fractions import Fraction
from math import gcd, lcm


cdef object _common_denominator(dict terms):
    cdef object den = 1
    for c in terms.values():
        den = lcm(den, c.denominator)
    return den


def poly_mul(dict a, dict b):
    """Product of two sparse polynomials."""
    if not a or not b:
        return {}
    cdef object da = _common_denominator(a)
    cdef object db = _common_denominator(b)
    cdef list ea_list = list(a.keys())
    cdef list eb_list = list(b.keys())
    cdef list ca_list = [c.numerator * (da // c.denominator) for c in a.values()]
    cdef list cb_list = [c.numerator * (db // c.denominator) for c in b.values()]
    cdef Py_ssize_t na = len(ea_list), nb = len(eb_list)
    cdef Py_ssize_t n = len(ea_list[0])
    cdef Py_ssize_t i, j
    cdef tuple ea, eb, e
    cdef object ca, prev
    cdef dict acc = {}
    cdef list flat_b = []
    for eb in eb_list:
        flat_b.extend(eb)
    for i in range(na):
        ea = <tuple>ea_list[i]
        ca = ca_list[i]
        for j in range(nb):
            e = _shifted(ea, flat_b, j * n, n)
            prev = acc.get(e)
            if prev is None:
                acc[e] = ca * cb_list[j]
            else:
                acc[e] = prev + ca * cb_list[j]
    cdef object den = da * db
    return {e: Fraction(c, den) for e, c in acc.items() if c}


cdef inline tuple _shifted(tuple ea, list flat_b, Py_ssize_t off, Py_ssize_t n):
    cdef list out = [0] * n
    cdef Py_ssize_t k
    for k in range(n):
        out[k] = <long>ea[k] + <long>flat_b[off + k]
    return tuple(out)


def poly_permute(dict terms, targets):
    """Move the exponent at position ``i`` to position ``targets[i]``."""
    cdef Py_ssize_t n = len(targets)
    cdef Py_ssize_t i
    cdef list tg = list(targets)
    cdef dict out = {}
    cdef list f
    cdef tuple e
    for e, c in terms.items():
        f = [0] * n
        for i in range(n):
            f[<Py_ssize_t>tg[i]] = e[i]
        out[tuple(f)] = c
    return out


def rref(rows, Py_ssize_t ncols):
    """Reduced row echelon form over the rationals.

    Returns ``(reduced_rows, pivot_columns)`` with zero rows dropped.
    """
    cdef list work = []
    cdef list irow, row, prow
    cdef object den, pv, f, v, g
    cdef Py_ssize_t r = 0, col, k, j, p, nrows
    for rw in rows:
        den = 1
        for c in rw:
            if c:
                den = lcm(den, Fraction(c).denominator)
        irow = [int(Fraction(c) * den) for c in rw]
        if any(irow):
            work.append(irow)

    nrows = len(work)
    cdef list pivots = []
    for col in range(ncols):
        if r == nrows:
            break
        p = -1
        for k in range(r, nrows):
            if (<list>work[k])[col]:
                p = k
                break
        if p < 0:
            continue
        work[r], work[p] = work[p], work[r]
        prow = <list>work[r]
        pv = prow[col]
        for k in range(nrows):
            if k == r:
                continue
            row = <list>work[k]
            f = row[col]
            if not f:
                continue
            g = 0
            for j in range(ncols):
                v = row[j] * pv - prow[j] * f
                row[j] = v
                if v:
                    g = gcd(g, v)
            if g > 1:
                for j in range(ncols):
                    if row[j]:
                        row[j] = row[j] // g
        pivots.append(col)
        r += 1

    cdef list out = []
    for k in range(len(pivots)):
        col = pivots[k]
        pv = (<list>work[k])[col]
        out.append([Fraction(v, pv) for v in <list>work[k]])
    return out, pivots
