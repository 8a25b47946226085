"""Pure-Python hot kernels.

Same algorithms and signatures as the compiled ``_ckernels`` module; used
whenever the extension is not built. Polynomials are plain dicts mapping
exponent tuples to nonzero ``Fraction`` coefficients.
"""

from fractions import Fraction
from math import gcd, lcm


def _common_denominator(terms):
    den = 1
    for c in terms.values():
        den = lcm(den, c.denominator)
    return den


def poly_mul(a, b):
    """Product of two sparse polynomials."""
    if not a or not b:
        return {}
    # integer accumulation over a common denominator; Fraction ops are slow
    da = _common_denominator(a)
    db = _common_denominator(b)
    ia = [(e, c.numerator * (da // c.denominator)) for e, c in a.items()]
    ib = [(e, c.numerator * (db // c.denominator)) for e, c in b.items()]
    acc = {}
    get = acc.get
    for ea, ca in ia:
        for eb, cb in ib:
            e = tuple([x + y for x, y in zip(ea, eb)])
            acc[e] = get(e, 0) + ca * cb
    den = da * db
    return {e: Fraction(c, den) for e, c in acc.items() if c}


def poly_permute(terms, targets):
    """Move the exponent at position ``i`` to position ``targets[i]``."""
    n = len(targets)
    out = {}
    for e, c in terms.items():
        f = [0] * n
        for i in range(n):
            f[targets[i]] = e[i]
        out[tuple(f)] = c
    return out


def rref(rows, ncols):
    """Reduced row echelon form over the rationals.

    ``rows`` is a list of equal-length sequences of rationals. Returns
    ``(reduced_rows, pivot_columns)`` with zero rows dropped.
    """
    work = []
    for row in rows:
        den = 1
        for c in row:
            if c:
                den = lcm(den, Fraction(c).denominator)
        irow = [int(Fraction(c) * den) for c in row]
        if any(irow):
            work.append(irow)

    pivots = []
    r = 0
    for col in range(ncols):
        if r == len(work):
            break
        p = None
        for k in range(r, len(work)):
            if work[k][col]:
                p = k
                break
        if p is None:
            continue
        work[r], work[p] = work[p], work[r]
        prow = work[r]
        pv = prow[col]
        for k in range(len(work)):
            if k == r:
                continue
            row = work[k]
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
                        row[j] //= g
        pivots.append(col)
        r += 1

    out = []
    for i, col in enumerate(pivots):
        pv = work[i][col]
        out.append([Fraction(v, pv) for v in work[i]])
    return out, pivots
