"""Exact linear algebra over the rationals."""

from __future__ import annotations

import math
from collections.abc import Sequence
from fractions import Fraction

Matrix = list[list[Fraction]]


def _integer_rows(matrix: Sequence[Sequence[Fraction]]) -> tuple[list[list[int]], int]:
    """Scale each row to integers; returns the rows and the product of scales."""
    rows, scale = [], 1
    for row in matrix:
        den = 1
        for x in row:
            den = math.lcm(den, Fraction(x).denominator)
        rows.append([int(Fraction(x) * den) for x in row])
        scale *= den
    return rows, scale


def bareiss_det(matrix: Sequence[Sequence[Fraction]]) -> Fraction:
    """Determinant by fraction-free Bareiss elimination.

    Rows are first cleared of denominators so every intermediate quantity is
    an integer and each division is exact.
    """
    n = len(matrix)
    if n == 0:
        return Fraction(1)
    if any(len(row) != n for row in matrix):
        raise ValueError("matrix is not square")
    a, scale = _integer_rows(matrix)
    sign, prev = 1, 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for r in range(k + 1, n):
                if a[r][k] != 0:
                    a[k], a[r] = a[r], a[k]
                    sign = -sign
                    break
            else:
                return Fraction(0)
        pivot = a[k][k]
        for i in range(k + 1, n):
            aik = a[i][k]
            row_i, row_k = a[i], a[k]
            for j in range(k + 1, n):
                row_i[j] = (row_i[j] * pivot - aik * row_k[j]) // prev
            row_i[k] = 0
        prev = pivot
    return Fraction(sign * a[n - 1][n - 1], scale)


def principal_submatrix(matrix: Sequence[Sequence[Fraction]], keep: Sequence[int]) -> Matrix:
    return [[matrix[i][j] for j in keep] for i in keep]


def solve(a: Sequence[Sequence[Fraction]], b: Sequence[Sequence[Fraction]]) -> Matrix:
    """Solve ``a x = b`` exactly for a nonsingular square ``a``."""
    n = len(a)
    cols = len(b[0]) if b else 0
    aug = [[Fraction(x) for x in a[i]] + [Fraction(x) for x in b[i]] for i in range(n)]
    for k in range(n):
        piv = next((r for r in range(k, n) if aug[r][k] != 0), None)
        if piv is None:
            raise ZeroDivisionError("singular matrix")
        aug[k], aug[piv] = aug[piv], aug[k]
        inv = 1 / aug[k][k]
        aug[k] = [x * inv for x in aug[k]]
        for r in range(n):
            if r != k and aug[r][k] != 0:
                f = aug[r][k]
                aug[r] = [x - f * y for x, y in zip(aug[r], aug[k])]
    return [row[n:n + cols] for row in aug]


def matmul(a: Sequence[Sequence[Fraction]], b: Sequence[Sequence[Fraction]]) -> Matrix:
    inner = len(b)
    cols = len(b[0]) if b else 0
    return [[sum((a[i][k] * b[k][j] for k in range(inner)), Fraction(0)) for j in range(cols)] for i in range(len(a))]
