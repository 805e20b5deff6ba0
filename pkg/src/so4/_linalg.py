"""Exact dense linear algebra over Q(i) scalars.

Small helper kernel shared by the algebra modules: reduced row echelon
form with a fixed pivot convention (pivot columns increase left to right,
pivot entries are 1, pivot columns are cleared above and below), plus
rank, span membership, right nullspaces, determinants and linear solves.
Everything works on lists of lists of Scalar and is exact.
"""

from __future__ import annotations

from .scalars import ONE, ZERO, Scalar

Row = list[Scalar]
Matrix = list[Row]


def rref(rows: list[Row]) -> tuple[Matrix, list[int]]:
    """Reduced row echelon form; returns (nonzero rows, pivot columns)."""
    m = [list(r) for r in rows]
    if not m:
        return [], []
    ncols = len(m[0])
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        pivot_row = None
        for i in range(r, len(m)):
            if m[i][c] != ZERO:
                pivot_row = i
                break
        if pivot_row is None:
            continue
        m[r], m[pivot_row] = m[pivot_row], m[r]
        inv = ONE / m[r][c]
        m[r] = [x * inv for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c] != ZERO:
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return m[:r], pivots


def coords_in_span(basis: Matrix, pivots: list[int], v: Row) -> list[Scalar] | None:
    """Coordinates of v in an RREF basis, or None when v is outside the span."""
    coeffs = [v[p] for p in pivots]
    residual = list(v)
    for coeff, row in zip(coeffs, basis):
        if coeff != ZERO:
            residual = [a - coeff * b for a, b in zip(residual, row)]
    if any(x != ZERO for x in residual):
        return None
    return coeffs


def right_nullspace(m: Matrix, ncols: int) -> Matrix:
    """Basis (RREF-derived) of {x : m @ x = 0} for an m with ncols columns."""
    basis, pivots = rref(m)
    free = [c for c in range(ncols) if c not in pivots]
    out: Matrix = []
    for f in free:
        x = [ZERO] * ncols
        x[f] = ONE
        for row, p in zip(basis, pivots):
            x[p] = -row[f]
        out.append(x)
    return out


def det(m: Matrix) -> Scalar:
    """Determinant by exact Gaussian elimination."""
    n = len(m)
    a = [list(r) for r in m]
    result = ONE
    for c in range(n):
        pivot_row = None
        for i in range(c, n):
            if a[i][c] != ZERO:
                pivot_row = i
                break
        if pivot_row is None:
            return ZERO
        if pivot_row != c:
            a[c], a[pivot_row] = a[pivot_row], a[c]
            result = -result
        result = result * a[c][c]
        inv = ONE / a[c][c]
        for i in range(c + 1, n):
            if a[i][c] != ZERO:
                f = a[i][c] * inv
                a[i] = [x - f * y for x, y in zip(a[i], a[c])]
    return result


def solve(m: Matrix, b: Row) -> Row | None:
    """One exact solution x of m @ x = b, or None when inconsistent."""
    if not m:
        return None
    ncols = len(m[0])
    aug = [list(row) + [bi] for row, bi in zip(m, b)]
    basis, pivots = rref(aug)
    x = [ZERO] * ncols
    for row, p in zip(basis, pivots):
        if p == ncols:
            return None
        x[p] = row[ncols]
    return x


def mat_mul(a: Matrix, b: Matrix) -> Matrix:
    return [
        [sum((a[i][k] * b[k][j] for k in range(len(b))), ZERO) for j in range(len(b[0]))]
        for i in range(len(a))
    ]


def mat_sub(a: Matrix, b: Matrix) -> Matrix:
    return [[x - y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def identity(n: int) -> Matrix:
    return [[ONE if i == j else ZERO for j in range(n)] for i in range(n)]


def trace(m: Matrix) -> Scalar:
    return sum((m[i][i] for i in range(len(m))), ZERO)
