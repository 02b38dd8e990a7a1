"""Pure-Python kernels for exact rational row reduction and matrix products.

This is the reference implementation and the fallback used when the
compiled extension (``_kernels_c``) has not been built.  Both modules
expose the same interface and must produce identical results.
"""

from fractions import Fraction

BACKEND = "python"

_ZERO = Fraction(0)


def rref_pivots(rows, ncols):
    """Reduced row echelon form by Gauss-Jordan elimination.

    ``rows`` is a list of lists of Fractions with ``ncols`` columns each.
    Returns ``(new_rows, pivot_columns)``.  The input is not modified.
    """
    m = [list(row) for row in rows]
    nrows = len(m)
    pivots = []
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        pr = -1
        for i in range(r, nrows):
            if m[i][c]:
                pr = i
                break
        if pr < 0:
            continue
        if pr != r:
            m[r], m[pr] = m[pr], m[r]
        piv = m[r][c]
        if piv != 1:
            inv = Fraction(piv.denominator, piv.numerator)
            m[r] = [x * inv for x in m[r]]
        row_r = m[r]
        for i in range(nrows):
            f = m[i][c]
            if f and i != r:
                m[i] = [a - f * b for a, b in zip(m[i], row_r)]
        pivots.append(c)
        r += 1
    return m, pivots


def matmul(a, b, bcols):
    """Product of row-major Fraction grids: ``a`` (n x m) times ``b`` (m x bcols)."""
    out = []
    for arow in a:
        acc = [_ZERO] * bcols
        for k, f in enumerate(arow):
            if f:
                brow = b[k]
                for j in range(bcols):
                    if brow[j]:
                        acc[j] += f * brow[j]
        out.append(acc)
    return out
