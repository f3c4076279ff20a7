"""Exact linear solves over the rationals by fraction-free (Bareiss) elimination.

Rows are first scaled to integers by clearing denominators, so every
intermediate value in the elimination is an exact integer.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import lcm
from typing import List, Sequence, Tuple


class SingularMatrixError(ArithmeticError):
    pass


@dataclass(frozen=True)
class GramSolveResult:
    """Solution of ``A x = b`` together with ``det(A)``."""

    coefficients: Tuple[Fraction, ...]
    determinant: Fraction


def _integer_rows(rows: Sequence[Sequence[Fraction]]) -> Tuple[List[List[int]], List[int]]:
    out, scales = [], []
    for row in rows:
        row = [Fraction(v) for v in row]
        s = lcm(*(v.denominator for v in row)) if row else 1
        out.append([int(v * s) for v in row])
        scales.append(s)
    return out, scales


def _check_square(A: Sequence[Sequence]) -> int:
    n = len(A)
    if any(len(r) != n for r in A):
        raise ValueError("matrix is not square")
    return n


def solve(A: Sequence[Sequence[Fraction]], b: Sequence[Fraction]) -> GramSolveResult:
    """Solve ``A x = b`` exactly.  Raises :class:`SingularMatrixError`."""
    n = _check_square(A)
    if len(b) != n:
        raise ValueError("right-hand side has the wrong length")
    if n == 0:
        return GramSolveResult((), Fraction(1))
    M, scales = _integer_rows([list(A[i]) + [b[i]] for i in range(n)])
    sign, prev = 1, 1
    for k in range(n):
        if M[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if M[i][k] != 0), None)
            if swap is None:
                raise SingularMatrixError(f"matrix is singular (rank deficiency at column {k})")
            M[k], M[swap] = M[swap], M[k]
            scales[k], scales[swap] = scales[swap], scales[k]
            sign = -sign
        pivot, row_k = M[k][k], M[k]
        for i in range(k + 1, n):
            row_i = M[i]
            f = row_i[k]
            for j in range(k + 1, n + 1):
                row_i[j] = (row_i[j] * pivot - f * row_k[j]) // prev
            row_i[k] = 0
        prev = pivot
    scale_prod = 1
    for s in scales:
        scale_prod *= s
    det = Fraction(sign * M[n - 1][n - 1], scale_prod)
    x: List[Fraction] = [Fraction(0)] * n
    for i in range(n - 1, -1, -1):
        acc = Fraction(M[i][n])
        for j in range(i + 1, n):
            if M[i][j]:
                acc -= M[i][j] * x[j]
        x[i] = acc / M[i][i]
    return GramSolveResult(tuple(x), det)


def determinant(A: Sequence[Sequence[Fraction]]) -> Fraction:
    n = _check_square(A)
    if n == 0:
        return Fraction(1)
    try:
        return solve(A, [0] * n).determinant
    except SingularMatrixError:
        return Fraction(0)


def leading_principal_minors(A: Sequence[Sequence[Fraction]]) -> List[Fraction]:
    """Determinants of the upper-left ``k x k`` blocks, ``k = 1..n``."""
    n = _check_square(A)
    M, scales = _integer_rows(A)
    minors: List[Fraction] = []
    prev, scale_prod = 1, 1
    for k in range(n):
        scale_prod *= scales[k]
        if M[k][k] == 0:
            # Bareiss without pivoting stalls; finish the rest directly
            minors.append(Fraction(0))
            minors.extend(determinant([row[: m + 1] for row in A[: m + 1]]) for m in range(k + 1, n))
            return minors
        minors.append(Fraction(M[k][k], scale_prod))
        pivot, row_k = M[k][k], M[k]
        for i in range(k + 1, n):
            row_i = M[i]
            f = row_i[k]
            for j in range(k + 1, n):
                row_i[j] = (row_i[j] * pivot - f * row_k[j]) // prev
            row_i[k] = 0
        prev = pivot
    return minors


def is_positive_definite(A: Sequence[Sequence[Fraction]]) -> bool:
    """Sylvester's criterion for a symmetric matrix."""
    return all(m > 0 for m in leading_principal_minors(A))
