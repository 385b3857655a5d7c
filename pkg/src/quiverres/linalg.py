"""Exact rational row reduction: rank, kernels and left kernels."""

from __future__ import annotations

from fractions import Fraction


def _rref(rows: list[list[Fraction]], ncols: int) -> tuple[list[list[Fraction]], list[int]]:
    m = [list(map(Fraction, r)) for r in rows]
    pivots = []
    r = 0
    for c in range(ncols):
        if r == len(m):
            break
        p = next((i for i in range(r, len(m)) if m[i][c] != 0), None)
        if p is None:
            continue
        m[r], m[p] = m[p], m[r]
        inv = 1 / m[r][c]
        m[r] = [x * inv for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [x - f * y for x, y in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
    return m[:r], pivots


def rank(rows, ncols: int | None = None) -> int:
    rows = [list(r) for r in rows]
    if not rows:
        return 0
    ncols = len(rows[0]) if ncols is None else ncols
    if ncols == 0:
        return 0
    return len(_rref(rows, ncols)[1])


def kernel(rows, ncols: int) -> list[list[Fraction]]:
    """Basis of {v : rows * v = 0} as a list of column vectors."""
    rows = [list(r) for r in rows]
    if not rows:
        return [[Fraction(int(i == j)) for i in range(ncols)] for j in range(ncols)]
    red, pivots = _rref(rows, ncols)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        v = [Fraction(0)] * ncols
        v[f] = Fraction(1)
        for row, p in zip(red, pivots):
            v[p] = -row[f]
        basis.append(v)
    return basis


def left_kernel(rows, ncols: int) -> list[list[Fraction]]:
    """Basis of {c : c * rows = 0} (row vectors) for a matrix with ``len(rows)`` rows."""
    nrows = len(rows)
    transposed = [[rows[i][j] for i in range(nrows)] for j in range(ncols)]
    return kernel(transposed, nrows)
