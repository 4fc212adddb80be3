"""Exact linear algebra over Q on lists of Fraction rows."""
from __future__ import annotations

from fractions import Fraction
from typing import Sequence


def rref(rows: Sequence[Sequence]) -> tuple:
    """Reduced row echelon form. Returns (nonzero rows, pivot columns)."""
    mat = [[Fraction(v) for v in row] for row in rows]
    if not mat:
        return [], []
    ncols = len(mat[0])
    pivots = []
    r = 0
    for col in range(ncols):
        pivot = next((i for i in range(r, len(mat)) if mat[i][col]), None)
        if pivot is None:
            continue
        mat[r], mat[pivot] = mat[pivot], mat[r]
        inv = 1 / mat[r][col]
        mat[r] = [v * inv for v in mat[r]]
        for i in range(len(mat)):
            if i != r and mat[i][col]:
                f = mat[i][col]
                mat[i] = [a - f * b for a, b in zip(mat[i], mat[r])]
        pivots.append(col)
        r += 1
        if r == len(mat):
            break
    return mat[:r], pivots


def rank(rows: Sequence[Sequence]) -> int:
    return len(rref(rows)[1])


def det(matrix: Sequence[Sequence]) -> Fraction:
    mat = [[Fraction(v) for v in row] for row in matrix]
    size = len(mat)
    if any(len(row) != size for row in mat):
        raise ValueError("determinant needs a square matrix")
    result = Fraction(1)
    for col in range(size):
        pivot = next((i for i in range(col, size) if mat[i][col]), None)
        if pivot is None:
            return Fraction(0)
        if pivot != col:
            mat[col], mat[pivot] = mat[pivot], mat[col]
            result = -result
        p = mat[col][col]
        result *= p
        for i in range(col + 1, size):
            if mat[i][col]:
                f = mat[i][col] / p
                mat[i] = [a - f * b for a, b in zip(mat[i], mat[col])]
    return result


def inverse(matrix: Sequence[Sequence]) -> list:
    size = len(matrix)
    aug = [list(row) + [Fraction(int(i == j)) for j in range(size)] for i, row in enumerate(matrix)]
    red, pivots = rref(aug)
    if pivots[:size] != list(range(size)) or len(red) < size:
        raise ValueError("matrix is singular")
    return [row[size:] for row in red]


class ColumnSolver:
    """Solve sum_j u_j * col_j = r exactly for a fixed set of independent columns."""

    def __init__(self, columns: Sequence[Sequence]):
        self.columns = [[Fraction(v) for v in c] for c in columns]
        m = len(self.columns)
        if m == 0:
            raise ValueError("no columns")
        height = len(self.columns[0])
        rows = [[self.columns[j][i] for j in range(m)] for i in range(height)]
        # choose pivot rows: rref of the transpose picks independent rows
        _, piv_rows = rref([[rows[i][j] for i in range(height)] for j in range(m)])
        if len(piv_rows) < m:
            raise ValueError("columns are linearly dependent")
        self.pivot_rows = piv_rows
        self.left_inverse = inverse([rows[i] for i in piv_rows])

    def solve(self, r: Sequence) -> list | None:
        sub = [r[i] for i in self.pivot_rows]
        u = [sum((a * b for a, b in zip(row, sub)), Fraction(0)) for row in self.left_inverse]
        for i in range(len(r)):
            if sum((self.columns[j][i] * u[j] for j in range(len(u))), Fraction(0)) != r[i]:
                return None
        return u
