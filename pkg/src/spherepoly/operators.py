"""Differential operators on polynomials in an ambient ``R^N``.

``M_jk = x_j d_k - x_k d_j`` generates rotations in the (j, k)-plane and the
Casimir is ``sum_{j<k<=N} M_jk^2``.  On all of ``P_N`` these satisfy

    |x|^2 Laplacian = euler^2 + (N - 2) euler + casimir.

The ambient ``N`` is always passed explicitly: the Casimir and the Laplacian
depend on it even when ``p`` uses fewer variables.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Dict

from .poly import ZERO, Monomial, Polynomial, norm_sq, partial_derivative


def _check_dim(p: Polynomial, N: int) -> None:
    if not isinstance(N, int) or N < 1:
        raise ValueError(f"ambient dimension must be a positive integer, got {N!r}")
    if p.max_index > N:
        raise ValueError(f"polynomial uses x{p.max_index} but the ambient dimension is N={N}")


def _x_times_d(i: int, j: int, p: Polynomial) -> Polynomial:
    """``x_i * d_j p`` computed term by term."""
    out: Dict[Monomial, Fraction] = {}
    for m, c in p.items():
        e = m.exponent(j)
        if not e:
            continue
        d = dict(m)
        d[j] = e - 1
        d[i] = d.get(i, 0) + 1
        key = Monomial(d)
        out[key] = out.get(key, 0) + e * c
    return Polynomial(out)


def apply_Mjk(j: int, k: int, p: Polynomial) -> Polynomial:
    if j == k:
        raise ValueError("M_jk needs two distinct indices")
    if j < 1 or k < 1:
        raise ValueError("variable indices must be >= 1")
    return _x_times_d(j, k, p) - _x_times_d(k, j, p)


def casimir(p: Polynomial, N: int) -> Polynomial:
    """Sum of ``M_jk^2 p`` over all pairs ``1 <= j < k <= N``."""
    _check_dim(p, N)
    support = p.variables
    total = ZERO
    for j in range(1, N + 1):
        for k in range(j + 1, N + 1):
            # M_jk annihilates polynomials free of both x_j and x_k
            if j not in support and k not in support:
                continue
            total = total + apply_Mjk(j, k, apply_Mjk(j, k, p))
    return total


def euler(p: Polynomial) -> Polynomial:
    """``sum_j x_j d_j p``."""
    total = ZERO
    for j in p.variables:
        total = total + _x_times_d(j, j, p)
    return total


def laplacian(p: Polynomial, N: int) -> Polynomial:
    _check_dim(p, N)
    total = ZERO
    for j in p.variables:
        total = total + partial_derivative(j, partial_derivative(j, p))
    return total


def norm_sq_times(p: Polynomial, N: int) -> Polynomial:
    _check_dim(p, N)
    return norm_sq(N) * p
