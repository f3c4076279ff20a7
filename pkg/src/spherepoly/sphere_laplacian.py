"""Spherical Laplacian on polynomials in fewer variables than the ambient space.

For ``p`` in ``x_1..x_n`` with ``n < N`` the value is the unique polynomial
in ``x_1..x_n`` congruent to ``casimir(p, N) / a2`` modulo ``|x|^2 - a2``.
It is built monomial by monomial from the one-variable case

    D(x_i^m) = [-m(N-1) x_i^m + m(m-1)(a2 - x_i^2) x_i^(m-2)] / a2

and the product rule for homogeneous factors in disjoint variables

    D(p q) = D(p) q - 2 deg(p) deg(q) / a2 * p q + p D(q).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Dict

from .operators import casimir, euler
from .pairing import SphereSpec
from .poly import ONE_MONOMIAL, ZERO, Monomial, Polynomial, max_coeff_norm, partial_derivative


@dataclass(frozen=True)
class SlapResult:
    value: Polynomial
    N: int
    spec: SphereSpec


def _power_term(j: int, m: int, s: SphereSpec) -> Polynomial:
    N, a2 = s.N, s.a2
    out = Polynomial.monomial(Monomial.var(j, m), Fraction(-m * (N - 1)) / a2)
    if m >= 2:
        c = Fraction(m * (m - 1))
        out = out + Polynomial.monomial(Monomial.var(j, m - 2), c)
        out = out - Polynomial.monomial(Monomial.var(j, m), c / a2)
    return out


def _slap_monomial(m: Monomial, s: SphereSpec, memo: Dict[Monomial, Polynomial]) -> Polynomial:
    if m in memo:
        return memo[m]
    if not m:
        out = ZERO
    elif len(m) == 1:
        out = _power_term(m[0][0], m[0][1], s)
    else:
        # split off the highest-index variable power
        j, e = m[-1]
        head = Monomial._raw(m[:-1])
        tail = Monomial._raw((m[-1],))
        hp, tp = Polynomial.monomial(head), Polynomial.monomial(tail)
        cross = Fraction(-2 * head.degree * e) / s.a2
        out = (
            _slap_monomial(head, s, memo) * tp
            + Polynomial.monomial(m, cross)
            + hp * _slap_monomial(tail, s, memo)
        )
    memo[m] = out
    return out


def sphere_laplacian(p: Polynomial, s: SphereSpec) -> SlapResult:
    """Spherical Laplacian of ``p`` on ``S^{N-1}(a)``.

    Uses the recursion when ``p`` lives in fewer than ``N`` variables, and
    ``casimir(p, N) / a2`` when it already involves ``x_N``.
    """
    if p.max_index > s.N:
        raise ValueError(f"polynomial uses x{p.max_index} but the ambient dimension is N={s.N}")
    if p.max_index == s.N:
        return SlapResult(casimir(p, s.N) / s.a2, s.N, s)
    memo: Dict[Monomial, Polynomial] = {ONE_MONOMIAL: ZERO}
    value = ZERO
    for m, c in p.items():
        value = value + _slap_monomial(m, s, memo) * c
    return SlapResult(value, s.N, s)


def hermite_operator(p: Polynomial) -> Polynomial:
    """``sum_j (d_j^2 - x_j d_j) p``."""
    second = ZERO
    for j in p.variables:
        second = second + partial_derivative(j, partial_derivative(j, p))
    return second - euler(p)


def slap_limit_error(p: Polynomial, N: int) -> Fraction:
    """Max coefficient gap between the Laplacian on ``S^{N-1}(sqrt N)`` and the Hermite operator."""
    if p.max_index >= N:
        raise ValueError(f"need fewer than N={N} variables, polynomial uses x{p.max_index}")
    value = sphere_laplacian(p, SphereSpec.standard(N)).value
    return max_coeff_norm(value - hermite_operator(p))
