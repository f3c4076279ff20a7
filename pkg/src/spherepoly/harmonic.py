"""Harmonic decomposition and reduction modulo the sphere ideal.

Every ``p`` in ``P_N`` splits uniquely as ``p0 + |x|^2 q`` with ``p0``
harmonic.  Under the Hermite pairing, multiplication by ``|x|^2`` is the
adjoint of the Laplacian ``T``, so per homogeneous degree ``d``::

    solve  (T T*) y = T p   in P^{d-2}_N,   then  p0 = p - |x|^2 y,  q = y.

``T T*`` preserves the parity pattern of exponents, so the system is solved
block by block, one block per parity class present in ``T p``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Dict, FrozenSet, Iterator, List, Tuple

from . import linalg
from .operators import laplacian, norm_sq_times
from .pairing import SphereSpec
from .poly import ZERO, Monomial, Polynomial, homogeneous_components


class NoRepresentativeError(ValueError):
    """The coset ``p + Z_N(a)`` has no member in the requested variables."""


@dataclass(frozen=True)
class HarmonicExpansion:
    """``p = p_0 + |x|^2 p_1 + ... + |x|^(2s) p_s`` with every ``p_i`` harmonic."""

    components: Tuple[Polynomial, ...]
    N: int

    def reassemble(self) -> Polynomial:
        out = ZERO
        for p in reversed(self.components):
            out = norm_sq_times(out, self.N) + p
        return out

    def restrict(self, a2: Fraction) -> Polynomial:
        """``p_0 + a2 p_1 + a2^2 p_2 + ...``."""
        out, w = ZERO, Fraction(1)
        for p in self.components:
            out = out + p * w
            w *= a2
        return out


@dataclass(frozen=True)
class SphereRemainder:
    """``original = quotient * (|x|^2 - a2) + remainder``, remainder of degree <= 1 in ``x_N``."""

    remainder: Polynomial
    quotient: Polynomial
    spec: SphereSpec


def _check_dim(p: Polynomial, N: int) -> None:
    if not isinstance(N, int) or N < 1:
        raise ValueError(f"ambient dimension must be a positive integer, got {N!r}")
    if p.max_index > N:
        raise ValueError(f"polynomial uses x{p.max_index} but the ambient dimension is N={N}")


def _parity(m: Monomial) -> FrozenSet[int]:
    return frozenset(j for j, e in m if e % 2)


def _compositions(total: int, parts: int) -> Iterator[Tuple[int, ...]]:
    if parts == 1:
        yield (total,)
        return
    for first in range(total, -1, -1):
        for rest in _compositions(total - first, parts - 1):
            yield (first,) + rest


def parity_class_monomials(degree: int, N: int, odd: FrozenSet[int]) -> List[Monomial]:
    """Monomials of ``P^degree_N`` whose odd exponents sit exactly at ``odd``."""
    spare = degree - len(odd)
    if spare < 0 or spare % 2:
        return []
    out = []
    for ks in _compositions(spare // 2, N):
        out.append(Monomial({j: 2 * k + (1 if j in odd else 0) for j, k in zip(range(1, N + 1), ks)}))
    return out


@lru_cache(maxsize=256)
def _block(degree: int, N: int, odd: FrozenSet[int]):
    basis = parity_class_monomials(degree, N, odd)
    index = {m: i for i, m in enumerate(basis)}
    n = len(basis)
    A = [[Fraction(0)] * n for _ in range(n)]
    for col, m in enumerate(basis):
        image = laplacian(norm_sq_times(Polynomial.monomial(m), N), N)
        for mm, c in image.items():
            A[index[mm]][col] = c
    return basis, index, A


def _split_homogeneous(p: Polynomial, N: int) -> Tuple[Polynomial, Polynomial]:
    d = p.degree
    if d < 2:
        return p, ZERO
    tp = laplacian(p, N)
    if not tp:
        return p, ZERO
    by_class: Dict[FrozenSet[int], Dict[Monomial, Fraction]] = {}
    for m, c in tp.items():
        by_class.setdefault(_parity(m), {})[m] = c
    y: Dict[Monomial, Fraction] = {}
    for odd, rhs_terms in by_class.items():
        basis, index, A = _block(d - 2, N, odd)
        rhs = [Fraction(0)] * len(basis)
        for m, c in rhs_terms.items():
            rhs[index[m]] = c
        sol = linalg.solve(A, rhs).coefficients
        for m, c in zip(basis, sol):
            if c:
                y[m] = c
    q = Polynomial(y)
    return p - norm_sq_times(q, N), q


def harmonic_decompose(p: Polynomial, N: int) -> Tuple[Polynomial, Polynomial]:
    """Return ``(p0, q)`` with ``p = p0 + |x|^2 q`` and ``p0`` harmonic in ``R^N``."""
    _check_dim(p, N)
    p0, q = ZERO, ZERO
    for comp in homogeneous_components(p).values():
        h, r = _split_homogeneous(comp, N)
        p0, q = p0 + h, q + r
    return p0, q


def base_r2_expansion(p: Polynomial, N: int) -> HarmonicExpansion:
    _check_dim(p, N)
    comps = []
    rest = p
    while rest:
        h, rest = harmonic_decompose(rest, N)
        comps.append(h)
    return HarmonicExpansion(tuple(comps), N)


def La_project(p: Polynomial, s: SphereSpec) -> Polynomial:
    """The harmonic polynomial agreeing with ``p`` on ``S^{N-1}(a)``."""
    _check_dim(p, s.N)
    if p.degree <= 0:
        return p
    return base_r2_expansion(p, s.N).restrict(s.a2)


def reduce_mod_sphere(p: Polynomial, s: SphereSpec) -> SphereRemainder:
    """Canonical form modulo ``|x|^2 - a2``: rewrite ``x_N^2 -> a2 - sum_{i<N} x_i^2``."""
    N = s.N
    _check_dim(p, N)
    # r = a2 - sum_{i<N} x_i^2, so x_N^2 = r on the sphere
    r = Polynomial.constant(s.a2) - sum((Polynomial.var(i, 2) for i in range(1, N)), ZERO)
    xn2 = Polynomial.var(N, 2)
    r_pows = [Polynomial.constant(1)]
    xn_pows = [Polynomial.constant(1)]

    def rpow(k: int) -> Polynomial:
        while len(r_pows) <= k:
            r_pows.append(r_pows[-1] * r)
        return r_pows[k]

    def xnpow(k: int) -> Polynomial:
        while len(xn_pows) <= k:
            xn_pows.append(xn_pows[-1] * xn2)
        return xn_pows[k]

    remainder, quotient = ZERO, ZERO
    grouped: Dict[Tuple[int, Monomial], Fraction] = {}
    for m, c in p.items():
        e = m.exponent(N)
        rest = Monomial(tuple((j, x) for j, x in m if j != N) + (((N, e % 2),) if e % 2 else ()))
        key = (e // 2, rest)
        grouped[key] = grouped.get(key, 0) + c
    for (k, rest), c in grouped.items():
        base = Polynomial.monomial(rest, c)
        if k == 0:
            remainder = remainder + base
            continue
        remainder = remainder + base * rpow(k)
        # x_N^{2k} - r^k = (x_N^2 - r) * sum_{i<k} x_N^{2i} r^{k-1-i}
        geo = ZERO
        for i in range(k):
            geo = geo + xnpow(i) * rpow(k - 1 - i)
        quotient = quotient + base * geo
    return SphereRemainder(remainder, quotient, s)


def in_sphere_ideal(p: Polynomial, s: SphereSpec) -> bool:
    return not reduce_mod_sphere(p, s).remainder


def minimal_representative(p: Polynomial, n: int, s: SphereSpec) -> Polynomial:
    """The unique member of ``p + Z_N(a)`` in ``x_1..x_n`` (requires ``n < N``)."""
    if not 1 <= n < s.N:
        raise ValueError(f"need 1 <= n < N, got n={n}, N={s.N}")
    rem = reduce_mod_sphere(p, s).remainder
    if rem.max_index > n:
        raise NoRepresentativeError(
            f"no representative in x1..x{n}: canonical remainder involves x{rem.max_index}"
        )
    return rem
