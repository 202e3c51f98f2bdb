"""Exact integer linear algebra on nested lists of Python ints."""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

Matrix = list[list[int]]


def smith_diagonal(mat: Sequence[Sequence[int]]) -> list[int]:
    """Diagonal of the Smith normal form of an integer matrix.

    The result has ``min(rows, cols)`` nonnegative entries, each dividing the
    next; trailing zeros record rank deficiency.
    """
    return _smith(mat, track=False)[0]


def smith_form(mat: Sequence[Sequence[int]], ncols: int | None = None
               ) -> tuple[list[int], Matrix]:
    """Smith diagonal together with a unimodular column transform ``V``.

    Some unimodular ``U`` gives ``U * mat * V = diag``; so ``x -> x V`` maps
    ``Z^cols / rowspan(mat)`` onto ``Z^cols / rowspan(diag)``.
    """
    return _smith(mat, track=True, ncols=ncols)


def _smith(mat, track: bool, ncols: int | None = None):
    a = [list(map(int, row)) for row in mat]
    rows = len(a)
    cols = len(a[0]) if rows else (ncols or 0)
    v = [[int(i == j) for j in range(cols)] for i in range(cols)] if track else None

    def swap_cols(i, j):
        if i == j:
            return
        for row in a:
            row[i], row[j] = row[j], row[i]
        if v is not None:
            for row in v:
                row[i], row[j] = row[j], row[i]

    def sub_col(j, s, q):
        for i in range(rows):
            a[i][j] -= q * a[i][s]
        if v is not None:
            for row in v:
                row[j] -= q * row[s]

    size = min(rows, cols)
    diag = []
    for s in range(size):
        pivot = _min_abs_nonzero(a, s)
        if pivot is None:
            diag.extend([0] * (size - s))
            break
        pi, pj = pivot
        a[s], a[pi] = a[pi], a[s]
        swap_cols(s, pj)
        while True:
            p = a[s][s]
            done = True
            for i in range(s + 1, rows):
                if a[i][s]:
                    q = a[i][s] // p
                    if q:
                        ai, as_ = a[i], a[s]
                        for j in range(s, cols):
                            ai[j] -= q * as_[j]
                    if a[i][s]:
                        done = False
            for j in range(s + 1, cols):
                if a[s][j]:
                    q = a[s][j] // p
                    if q:
                        sub_col(j, s, q)
                    if a[s][j]:
                        done = False
            if not done:
                pi, pj = _min_abs_nonzero_cross(a, s)
                a[s], a[pi] = a[pi], a[s]
                swap_cols(s, pj)
                continue
            bad = _non_divisible(a, s)
            if bad is None:
                break
            # fold an offending row into the pivot row and repeat
            for j in range(s, cols):
                a[s][j] += a[bad][j]
        diag.append(abs(a[s][s]))
    return diag, v


def _min_abs_nonzero(a: Matrix, s: int):
    best = None
    for i in range(s, len(a)):
        for j in range(s, len(a[i])):
            v = a[i][j]
            if v and (best is None or abs(v) < best[0]):
                best = (abs(v), i, j)
                if best[0] == 1:
                    return i, j
    return None if best is None else best[1:]


def _min_abs_nonzero_cross(a: Matrix, s: int):
    best = None
    for i in range(s, len(a)):
        v = a[i][s]
        if v and (best is None or abs(v) < best[0]):
            best = (abs(v), i, s)
    for j in range(s, len(a[s])):
        v = a[s][j]
        if v and (best is None or abs(v) < best[0]):
            best = (abs(v), s, j)
    return best[1:]


def _non_divisible(a: Matrix, s: int):
    p = a[s][s]
    for i in range(s + 1, len(a)):
        for j in range(s + 1, len(a[i])):
            if a[i][j] % p:
                return i
    return None


def det(mat: Sequence[Sequence[int]]) -> int:
    """Determinant by fraction-free (Bareiss) elimination."""
    a = [list(map(int, row)) for row in mat]
    n = len(a)
    if any(len(row) != n for row in a):
        raise ValueError("determinant of a non-square matrix")
    if n == 0:
        return 1
    sign, prev = 1, 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k]:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def inverse(mat: Sequence[Sequence[int]]) -> list[list[Fraction]]:
    """Exact rational inverse by Gauss-Jordan elimination."""
    n = len(mat)
    a = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)]
         for i, row in enumerate(mat)]
    for c in range(n):
        p = next((i for i in range(c, n) if a[i][c] != 0), None)
        if p is None:
            raise ZeroDivisionError("singular matrix")
        a[c], a[p] = a[p], a[c]
        pv = a[c][c]
        a[c] = [x / pv for x in a[c]]
        for i in range(n):
            if i != c and a[i][c] != 0:
                f = a[i][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[c])]
    return [row[n:] for row in a]


def unimodular_inverse(mat: Sequence[Sequence[int]]) -> Matrix:
    """Integer inverse of a determinant +-1 matrix."""
    if abs(det(mat)) != 1:
        raise ValueError("matrix is not unimodular")
    inv = inverse(mat)
    return [[int(x) for x in row] for row in inv]


def matmul(a: Sequence[Sequence[int]], b: Sequence[Sequence[int]]) -> Matrix:
    bt = list(zip(*b))
    return [[sum(x * y for x, y in zip(row, col)) for col in bt] for row in a]
