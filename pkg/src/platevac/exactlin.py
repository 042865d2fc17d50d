"""Exact linear algebra over fractions.Fraction for small dense systems.

Everything here works on lists of lists of Fraction and is meant for
matrices with at most a few dozen rows. Rank decisions are exact, so
any nonzero entry is an acceptable pivot.
"""

from __future__ import annotations

from fractions import Fraction


def as_matrix(rows) -> list[list[Fraction]]:
    """Deep-copy `rows` into a rectangular list of Fractions."""
    out = [[Fraction(x) for x in row] for row in rows]
    if out:
        width = len(out[0])
        if any(len(row) != width for row in out):
            raise ValueError("ragged matrix")
    return out


def rref(rows) -> tuple[list[list[Fraction]], list[int]]:
    """Reduced row echelon form of a copy of `rows`.

    Returns (matrix, pivot_columns). Pivot search scans the remaining
    submatrix for the first nonzero entry, which over exact rationals
    is as rank-revealing as any pivoting strategy.
    """
    m = as_matrix(rows)
    if not m or not m[0]:
        return m, []
    nrows, ncols = len(m), len(m[0])
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        pr = next((i for i in range(r, nrows) if m[i][c] != 0), None)
        if pr is None:
            continue
        m[r], m[pr] = m[pr], m[r]
        inv = Fraction(1) / m[r][c]
        m[r] = [x * inv for x in m[r]]
        for i in range(nrows):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    return m, pivots


def rank(rows) -> int:
    return len(rref(rows)[1])


def nullity(rows) -> int:
    m = as_matrix(rows)
    if not m or not m[0]:
        return len(m[0]) if m else 0
    return len(m[0]) - rank(m)


def solve(a_rows, b_col):
    """One exact solution of A x = b with free variables set to zero.

    Returns the solution as a list of Fractions, or None when the system
    is inconsistent.
    """
    a = as_matrix(a_rows)
    b = [Fraction(x) for x in b_col]
    if len(a) != len(b):
        raise ValueError("A and b row counts differ")
    if not a:
        return []
    ncols = len(a[0])
    aug = [row + [rhs] for row, rhs in zip(a, b)]
    red, pivots = rref(aug)
    if ncols in pivots:
        return None
    x = [Fraction(0)] * ncols
    for r, c in enumerate(pivots):
        x[c] = red[r][-1]
    return x


def inverse(rows):
    """Exact inverse, or None when the matrix is singular."""
    a = as_matrix(rows)
    n = len(a)
    if any(len(row) != n for row in a):
        raise ValueError("inverse needs a square matrix")
    aug = [row + [Fraction(int(i == j)) for j in range(n)] for i, row in enumerate(a)]
    red, pivots = rref(aug)
    if pivots != list(range(n)):
        return None
    return [row[n:] for row in red]


def matmul(a_rows, b_rows):
    a = as_matrix(a_rows)
    b = as_matrix(b_rows)
    if a and b and len(a[0]) != len(b):
        raise ValueError("inner dimensions differ")
    return [
        [sum((ra[k] * b[k][j] for k in range(len(b))), Fraction(0)) for j in range(len(b[0]))]
        for ra in a
    ]
