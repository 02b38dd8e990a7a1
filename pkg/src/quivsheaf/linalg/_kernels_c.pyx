# cython: language_level=3
"""Compiled kernels: exact rational Gauss-Jordan and matrix product.

Mirrors ``_kernels_py`` but carries numerators and denominators as plain
Python integers, skipping Fraction allocation and operator dispatch in
the inner loops.  Arithmetic stays arbitrary-precision and exact.
"""

from fractions import Fraction
from math import gcd

BACKEND = "compiled"


cdef inline tuple q_reduce(object n, object d):
    # Normalize n/d: positive denominator, coprime, canonical zero.
    if n == 0:
        return (0, 1)
    if d < 0:
        n = -n
        d = -d
    g = gcd(n, d)
    if g != 1:
        n //= g
        d //= g
    return (n, d)


def rref_pivots(rows, Py_ssize_t ncols):
    """Reduced row echelon form; same contract as _kernels_py.rref_pivots."""
    cdef Py_ssize_t nrows = len(rows)
    cdef Py_ssize_t r = 0, c, i, j, pr
    cdef list nums = []
    cdef list dens = []
    cdef list pivots = []
    cdef list rn, rd, qn, qd
    cdef object fn, fd, an, ad, bn, bd

    for row in rows:
        rn = []
        rd = []
        for x in row:
            rn.append(x.numerator)
            rd.append(x.denominator)
        nums.append(rn)
        dens.append(rd)

    for c in range(ncols):
        if r == nrows:
            break
        pr = -1
        for i in range(r, nrows):
            if (<list> nums[i])[c] != 0:
                pr = i
                break
        if pr < 0:
            continue
        if pr != r:
            nums[r], nums[pr] = nums[pr], nums[r]
            dens[r], dens[pr] = dens[pr], dens[r]
        rn = <list> nums[r]
        rd = <list> dens[r]
        fn = rn[c]
        fd = rd[c]
        if fn != fd:
            # scale row r by fd/fn so the pivot becomes 1
            for j in range(ncols):
                an = rn[j]
                if an != 0:
                    an, ad = q_reduce(an * fd, (<object> rd[j]) * fn)
                    rn[j] = an
                    rd[j] = ad
        else:
            rn[c] = 1
            rd[c] = 1
        for i in range(nrows):
            if i == r:
                continue
            qn = <list> nums[i]
            fn = qn[c]
            if fn == 0:
                continue
            qd = <list> dens[i]
            fd = qd[c]
            for j in range(ncols):
                bn = rn[j]
                if bn == 0:
                    continue
                bd = rd[j]
                an = qn[j]
                ad = qd[j]
                # q[i][j] -= (fn/fd) * (bn/bd)
                an, ad = q_reduce(an * fd * bd - fn * bn * ad, ad * fd * bd)
                qn[j] = an
                qd[j] = ad
        pivots.append(c)
        r += 1

    out = []
    for i in range(nrows):
        rn = <list> nums[i]
        rd = <list> dens[i]
        out.append([Fraction(rn[j], rd[j]) for j in range(ncols)])
    return out, pivots


def matmul(a, b, Py_ssize_t bcols):
    """Product of row-major Fraction grids; same contract as _kernels_py.matmul."""
    cdef Py_ssize_t m = len(b)
    cdef Py_ssize_t j, k
    cdef list bn_rows = []
    cdef list bd_rows = []
    cdef list rn, rd, cn, cd
    cdef object fn, fd, bn, bd, an, ad

    for row in b:
        rn = []
        rd = []
        for x in row:
            rn.append(x.numerator)
            rd.append(x.denominator)
        bn_rows.append(rn)
        bd_rows.append(rd)

    out = []
    for arow in a:
        cn = [0] * bcols
        cd = [1] * bcols
        for k in range(m):
            x = arow[k]
            fn = x.numerator
            if fn == 0:
                continue
            fd = x.denominator
            rn = <list> bn_rows[k]
            rd = <list> bd_rows[k]
            for j in range(bcols):
                bn = rn[j]
                if bn == 0:
                    continue
                bd = rd[j]
                an = cn[j]
                ad = cd[j]
                # c[j] += (fn/fd) * (bn/bd)
                an, ad = q_reduce(an * fd * bd + fn * bn * ad, ad * fd * bd)
                cn[j] = an
                cd[j] = ad
        out.append([Fraction(cn[j], cd[j]) for j in range(bcols)])
    return out
