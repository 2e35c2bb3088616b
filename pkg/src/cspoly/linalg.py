"""Exact rank and kernels over the rationals.

Rows are scaled to integers and reduced by fraction-free elimination
(integer row combinations followed by division by the row content), so no
rational arithmetic happens inside the inner loop.
"""

from __future__ import annotations

from fractions import Fraction
from functools import reduce
from math import gcd, lcm
from typing import Sequence

import numpy as np

Number = int | Fraction
Matrix = Sequence[Sequence[Number]]


def _integer_row(row: Sequence[Number]) -> list[int]:
    den = reduce(lcm, (x.denominator for x in row if isinstance(x, Fraction)), 1)
    return [int(x * den) for x in row]


def _primitive(row: list[int]) -> list[int]:
    g = reduce(gcd, row, 0)
    if g > 1:
        return [x // g for x in row]
    return row


def rref_integer(matrix: Matrix, ncols: int | None = None) -> tuple[list[list[int]], list[int]]:
    """Reduced row echelon form with primitive integer rows.

    Returns the non-zero rows and their pivot columns.  Each row vanishes
    in every other row's pivot column; pivots are positive.
    """
    rows = [_primitive(_integer_row(r)) for r in matrix]
    rows = [r for r in rows if any(r)]
    if ncols is None:
        ncols = len(matrix[0]) if matrix else 0
    pivots: list[int] = []
    top = 0
    for c in range(ncols):
        if top == len(rows):
            break
        best = None
        for i in range(top, len(rows)):
            x = rows[i][c]
            if x and (best is None or abs(x) < abs(rows[best][c])):
                best = i
        if best is None:
            continue
        rows[top], rows[best] = rows[best], rows[top]
        prow = rows[top]
        if prow[c] < 0:
            prow = rows[top] = [-x for x in prow]
        p = prow[c]
        for i in range(len(rows)):
            if i == top:
                continue
            x = rows[i][c]
            if x:
                g = gcd(p, x)
                a, b = p // g, x // g
                rows[i] = _primitive([a * ri - b * pi for ri, pi in zip(rows[i], prow)])
        pivots.append(c)
        top += 1
    return rows[:top], pivots


def rank(matrix: Matrix) -> int:
    if not matrix:
        return 0
    return len(rref_integer(matrix)[0])


def nullspace(matrix: Matrix, ncols: int | None = None) -> list[list[Fraction]]:
    """Basis of {x : A x = 0}, one vector per free column.

    Vector k has a 1 in the k-th free column and 0 in the other free
    columns, so bases are canonical and directly comparable.
    """
    if ncols is None:
        if not matrix:
            raise ValueError("ncols is required for a matrix without rows")
        ncols = len(matrix[0])
    rows, pivots = rref_integer(matrix, ncols)
    pivset = set(pivots)
    basis = []
    for f in range(ncols):
        if f in pivset:
            continue
        x = [Fraction(0)] * ncols
        x[f] = Fraction(1)
        for row, c in zip(rows, pivots):
            if row[f]:
                x[c] = Fraction(-row[f], row[c])
        basis.append(x)
    return basis


def transpose(matrix: Matrix, ncols: int) -> list[list[Number]]:
    return [[row[j] for row in matrix] for j in range(ncols)]


def left_nullspace(matrix: Matrix, ncols: int) -> list[list[Fraction]]:
    """Basis of {y : y^T A = 0}."""
    return nullspace(transpose(matrix, ncols), len(matrix))


def same_span(a: Matrix, b: Matrix) -> bool:
    ra, rb = rank(a) if a else 0, rank(b) if b else 0
    both = list(a) + list(b)
    return ra == rb == (rank(both) if both else 0)


def numeric_rank(matrix: Matrix, rtol: float = 1e-9) -> int:
    """Floating-point rank by SVD, for cross-checks only."""
    if not matrix or not len(matrix[0]):
        return 0
    arr = np.array([[float(x) for x in row] for row in matrix])
    s = np.linalg.svd(arr, compute_uv=False)
    return int((s > rtol * s[0]).sum()) if s.size and s[0] > 0 else 0
