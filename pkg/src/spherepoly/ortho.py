"""Orthogonal polynomials and their large-N limits.

Monic Hermite and Gegenbauer polynomials, the one-variable zonal
polynomials ``q_m`` (Gram-Schmidt of ``1, x, x^2, ...`` under the sphere
pairing), orthogonal projections against the Gaussian and sphere pairings,
and exact error tables for the limits on ``S^{N-1}(sqrt N)`` as ``N`` grows.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations_with_replacement
from typing import List, Sequence, Tuple, Union

from . import linalg
from .harmonic import La_project
from .pairing import Pairing, SphereSpec, gram_matrix, gaussian_inner, pairing_function, sphere_inner
from .poly import ONE, ZERO, Monomial, Polynomial, Scalar, max_coeff_norm, partial_derivative
from .sphere_laplacian import slap_limit_error


@dataclass(frozen=True)
class OrthogonalFamily:
    """Monic ``q_0, q_1, ...`` (``q_i`` of degree ``i``) orthogonal under ``pairing``."""

    members: Tuple[Polynomial, ...]
    pairing: Pairing

    def is_orthogonal(self) -> bool:
        f = pairing_function(self.pairing)
        return all(
            f(self.members[i], self.members[j]) == 0
            for i in range(len(self.members))
            for j in range(i)
        )


@dataclass(frozen=True)
class LimitTable:
    """Exact errors ``(N, error)`` of a finite-N object against its N -> infinity limit."""

    kind: str
    target: str
    rows: Tuple[Tuple[int, Fraction], ...]

    @property
    def errors(self) -> List[Fraction]:
        return [e for _, e in self.rows]

    def records(self) -> List[dict]:
        return [
            {"N": N, "error": str(e), "error_float": float(e)}
            for N, e in self.rows
        ]


def hermite_poly(m: int, var: int = 1) -> Polynomial:
    """Monic (probabilists') Hermite polynomial ``H_m(x_var)``."""
    if m < 0:
        raise ValueError("degree must be non-negative")
    x = Polynomial.var(var)
    prev, cur = ZERO, ONE
    for k in range(m):
        prev, cur = cur, x * cur - prev * k
    return cur


def gegenbauer_coefficients(b: Scalar, m: int) -> List[Fraction]:
    """Coefficients ``c_0..c_m`` of the monic degree-m Gegenbauer polynomial with parameter ``b``."""
    if m < 0:
        raise ValueError("degree must be non-negative")
    b = Fraction(b)
    c = [Fraction(0)] * (m + 1)
    c[m] = Fraction(1)
    target = m * (m + 2 * b)
    for k in range(m - 2, -1, -2):
        den = k * (k + 2 * b) - target
        if den == 0:
            raise ZeroDivisionError(f"Gegenbauer recursion breaks down at k={k} for b={b}, m={m}")
        c[k] = (k + 2) * (k + 1) * c[k + 2] / den
    return c


def gegenbauer_monic(b: Scalar, m: int, var: int = 1) -> Polynomial:
    """Monic solution of ``(1-y^2)p'' - (2b+1)y p' + m(m+2b)p = 0`` in the variable ``x_var``."""
    return Polynomial.univariate(gegenbauer_coefficients(b, m), var)


def gegenbauer_zonal(m: int, s: SphereSpec, var: int = 1) -> Polynomial:
    """``a^m C_m^{((N-2)/2)}(x/a)``, written with ``a2`` only (same-parity exponents)."""
    c = gegenbauer_coefficients(Fraction(s.N - 2, 2), m)
    return Polynomial(
        {Monomial.var(var, k): c[k] * s.a2 ** ((m - k) // 2) for k in range(m + 1) if c[k]}
    )


def orthogonal_complement(p: Polynomial, basis: Sequence[Polynomial], pairing: Pairing) -> Polynomial:
    """``p`` minus its orthogonal projection onto ``span(basis)``, via one Gram solve."""
    if not basis:
        return p
    f = pairing_function(pairing)
    G = gram_matrix(basis, f)
    rhs = [f(w, p) for w in basis]
    coeffs = linalg.solve(G.entries, rhs).coefficients
    out = p
    for c, w in zip(coeffs, basis):
        if c:
            out = out - w * c
    return out


def monomials_up_to(k: int, d: int) -> List[Monomial]:
    """Monomial basis of polynomials of degree ``<= d`` in ``x_1..x_k`` (graded order)."""
    out = []
    for deg in range(d + 1):
        for combo in combinations_with_replacement(range(1, k + 1), deg):
            exps = {}
            for j in combo:
                exps[j] = exps.get(j, 0) + 1
            out.append(Monomial(exps))
    return out


def zonal_poly(m: int, s: SphereSpec, var: int = 1) -> Polynomial:
    """Monic degree-m polynomial in ``x_var`` orthogonal to lower powers on ``S^{N-1}(a)``."""
    if s.N < 2:
        raise ValueError("zonal polynomials need N >= 2")
    if m < 0:
        raise ValueError("degree must be non-negative")
    basis = [Polynomial.var(var, j) if j else ONE for j in range(m)]
    return orthogonal_complement(Polynomial.var(var, m) if m else ONE, basis, s)


def zonal_harmonic(m: int, s: SphereSpec) -> Polynomial:
    """Harmonic, degree-m homogeneous polynomial in N variables agreeing with ``q_m(x_1)`` on the sphere."""
    return La_project(zonal_poly(m, s), s)


def zonal_ode_residual(q: Polynomial, m: int, s: SphereSpec, var: int = 1) -> Polynomial:
    """``(a2 - x^2) q'' - (N-1) x q' + m(m+N-2) q``; zero exactly for zonal ``q_m``."""
    x = Polynomial.var(var)
    d1 = partial_derivative(var, q)
    d2 = partial_derivative(var, d1)
    return (Polynomial.constant(s.a2) - x * x) * d2 - x * d1 * (s.N - 1) + q * (m * (m + s.N - 2))


def hermite_family(m_max: int) -> OrthogonalFamily:
    return OrthogonalFamily(tuple(hermite_poly(m) for m in range(m_max + 1)), "gaussian")


def zonal_family(m_max: int, s: SphereSpec) -> OrthogonalFamily:
    return OrthogonalFamily(tuple(zonal_poly(m, s) for m in range(m_max + 1)), s)


def gauss_projection_complement(p: Polynomial, d: int, k: int | None = None) -> Polynomial:
    """Part of ``p`` Gaussian-orthogonal to every polynomial of degree ``< d`` in ``x_1..x_k``.

    ``k`` defaults to the largest variable index of ``p``; enlarging it does
    not change the result.
    """
    if p.degree > d:
        raise ValueError(f"degree of p ({p.degree}) exceeds the bound d={d}")
    if k is None:
        k = p.max_index
    if k < p.max_index:
        raise ValueError("k is smaller than the number of variables of p")
    basis = [Polynomial.monomial(m) for m in monomials_up_to(k, d - 1)] if d >= 1 else []
    return orthogonal_complement(p, basis, "gaussian")


def sphere_projection_complement(p: Polynomial, k: int, d: int, s: SphereSpec) -> Polynomial:
    """Part of ``p`` orthogonal on ``S^{N-1}(a)`` to degree ``< d`` polynomials in ``x_1..x_k``."""
    if p.max_index > k:
        raise ValueError(f"p uses x{p.max_index}, outside x1..x{k}")
    if p.degree > d:
        raise ValueError(f"degree of p ({p.degree}) exceeds the bound d={d}")
    if k >= s.N:
        raise ValueError(f"the sphere pairing is an inner product only for k < N (k={k}, N={s.N})")
    basis = [Polynomial.monomial(m) for m in monomials_up_to(k, d - 1)] if d >= 1 else []
    return orthogonal_complement(p, basis, s)


LIMIT_KINDS = ("inner_product", "projected_monomial", "zonal_to_hermite", "slap_to_hermite")

Payload = Union[int, Polynomial, Tuple[Polynomial, Polynomial]]


def _payload_vars(kind: str, payload: Payload) -> int:
    if kind == "inner_product":
        return max(payload[0].max_index, payload[1].max_index)
    if kind == "zonal_to_hermite":
        return 1
    return payload.max_index


def limit_table(kind: str, payload: Payload, N_list: Sequence[int]) -> LimitTable:
    """Exact max-coefficient (or absolute) errors at each ``N`` with ``a2 = N``.

    * ``inner_product``: payload ``(p, q)``; ``|<p,q>_N - <p,q>_Gauss|``.
    * ``projected_monomial``: payload ``p``; sphere vs Gaussian projection complement, ``d = deg p``.
    * ``zonal_to_hermite``: payload ``m``; ``q_m`` on ``S^{N-1}(sqrt N)`` vs ``H_m``.
    * ``slap_to_hermite``: payload ``p``; spherical Laplacian vs the Hermite operator.
    """
    if kind not in LIMIT_KINDS:
        raise ValueError(f"unknown limit kind {kind!r}; expected one of {LIMIT_KINDS}")
    Ns = list(N_list)
    if any(b <= a for a, b in zip(Ns, Ns[1:])):
        raise ValueError("N_list must be strictly increasing")
    nvars = _payload_vars(kind, payload)
    if Ns and Ns[0] <= nvars:
        raise ValueError(f"every N must exceed the payload's variable count ({nvars})")

    rows = []
    if kind == "inner_product":
        p, q = payload
        limit = gaussian_inner(p, q)
        target = f"<{p}, {q}> Gaussian = {limit}"
        for N in Ns:
            rows.append((N, abs(sphere_inner(p, q, SphereSpec.standard(N)) - limit)))
    elif kind == "projected_monomial":
        p = payload
        d = max(p.degree, 0)
        k = max(p.max_index, 1)
        limit = gauss_projection_complement(p, d, k)
        target = f"Gaussian complement of {p}: {limit}"
        for N in Ns:
            finite = sphere_projection_complement(p, k, d, SphereSpec.standard(N))
            rows.append((N, max_coeff_norm(finite - limit)))
    elif kind == "zonal_to_hermite":
        m = int(payload)
        limit = hermite_poly(m)
        target = f"H_{m} = {limit}"
        for N in Ns:
            rows.append((N, max_coeff_norm(zonal_poly(m, SphereSpec.standard(N)) - limit)))
    else:
        p = payload
        target = f"Hermite operator on {p}"
        for N in Ns:
            rows.append((N, slap_limit_error(p, N)))
    return LimitTable(kind, target, tuple(rows))
