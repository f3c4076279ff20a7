"""Gaussian, Hermite and spherical pairings on polynomials, computed exactly.

The sphere ``S^{N-1}(a)`` carries its unit-mass uniform measure and is
identified by ``N`` and the squared radius ``a2``.  A homogeneous integrand
of even degree ``e`` integrates over it to ``a2**(e/2) / degree_factor(e, N)``
times its Gaussian integral; odd degrees integrate to zero.  No Gamma values
are ever evaluated, so everything stays in the rationals.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import factorial
from typing import Callable, List, Sequence, Tuple, Union

from .poly import Monomial, Polynomial


@dataclass(frozen=True)
class SphereSpec:
    """Sphere of squared radius ``a2`` in ``R^N``."""

    N: int
    a2: Fraction = field(default=None)

    def __post_init__(self):
        if not isinstance(self.N, int) or self.N < 1:
            raise ValueError(f"dimension N must be a positive integer, got {self.N!r}")
        a2 = Fraction(self.N if self.a2 is None else self.a2)
        if a2 <= 0:
            raise ValueError(f"squared radius must be positive, got {a2}")
        object.__setattr__(self, "a2", a2)

    @classmethod
    def standard(cls, N: int) -> "SphereSpec":
        """The sphere of radius ``sqrt(N)``."""
        return cls(N, Fraction(N))

    def __str__(self) -> str:
        return f"S^{self.N - 1}(a2={self.a2})"


def _double_factorial_odd(k: int) -> int:
    # (k-1)!! for even k >= 0
    out = 1
    for i in range(k - 1, 0, -2):
        out *= i
    return out


def gaussian_moment(m: Monomial) -> Fraction:
    """Integral of ``m`` against the product standard Gaussian."""
    out = 1
    for _, e in m:
        if e % 2:
            return Fraction(0)
        out *= _double_factorial_odd(e)
    return Fraction(out)


def gaussian_inner(p: Polynomial, q: Polynomial) -> Fraction:
    return sum((c * gaussian_moment(m) for m, c in (p * q).items()), Fraction(0))


def hermite_inner(p: Polynomial, q: Polynomial) -> Fraction:
    """Monomials orthogonal, ``<x^j, x^j>_h = j_1! j_2! ...``."""
    if len(q) < len(p):
        p, q = q, p
    total = Fraction(0)
    qt = q.terms
    for m, c in p.items():
        d = qt.get(m)
        if d is not None:
            w = 1
            for _, e in m:
                w *= factorial(e)
            total += c * d * w
    return total


def degree_factor(d: int, N: int) -> Fraction:
    """``N (N+2) ... (N+d-2)`` for even ``d``; equals ``2^(d/2) Gamma((N+d)/2) / Gamma(N/2)``."""
    if d < 0 or d % 2:
        raise ValueError(f"degree must be even and non-negative, got {d}")
    out = 1
    for i in range(d // 2):
        out *= N + 2 * i
    return Fraction(out)


def adN_factor(d: int, N: int) -> Fraction:
    """``prod_{j=1..d} (1 + 2(j-1)/N)``, so that Gaussian = adN * sphere(sqrt N) on degree 2d."""
    if d < 0:
        raise ValueError(f"d must be non-negative, got {d}")
    out = Fraction(1)
    for j in range(1, d + 1):
        out *= 1 + Fraction(2 * (j - 1), N)
    return out


def _check_index(p: Polynomial, N: int) -> None:
    if p.max_index > N:
        raise ValueError(f"polynomial uses x{p.max_index} but the ambient dimension is N={N}")


def sphere_integral(p: Polynomial, s: SphereSpec) -> Fraction:
    """Exact mean of ``p`` over ``S^{N-1}(a)``."""
    _check_index(p, s.N)
    total = Fraction(0)
    cache = {}
    for m, c in p.items():
        g = gaussian_moment(m)
        if not g:
            continue
        e = m.degree
        if e not in cache:
            cache[e] = s.a2 ** (e // 2) / degree_factor(e, s.N)
        total += c * g * cache[e]
    return total


def sphere_inner(p: Polynomial, q: Polynomial, s: SphereSpec) -> Fraction:
    return sphere_integral(p * q, s)


Pairing = Union[str, SphereSpec, Callable[[Polynomial, Polynomial], Fraction]]


def pairing_function(pairing: Pairing) -> Callable[[Polynomial, Polynomial], Fraction]:
    """Resolve ``"gaussian"``, ``"hermite"``, a :class:`SphereSpec` or a callable."""
    if isinstance(pairing, SphereSpec):
        return lambda p, q: sphere_inner(p, q, pairing)
    if pairing == "gaussian":
        return gaussian_inner
    if pairing == "hermite":
        return hermite_inner
    if callable(pairing):
        return pairing
    raise ValueError(f"unknown pairing {pairing!r}")


@dataclass(frozen=True)
class GramMatrix:
    basis: Tuple[Polynomial, ...]
    entries: Tuple[Tuple[Fraction, ...], ...]

    def __len__(self) -> int:
        return len(self.basis)

    def is_symmetric(self) -> bool:
        n = len(self.entries)
        return all(self.entries[i][j] == self.entries[j][i] for i in range(n) for j in range(i))


def gram_matrix(basis: Sequence[Polynomial], pairing: Pairing) -> GramMatrix:
    # pairings here are symmetric; only the upper triangle is evaluated
    f = pairing_function(pairing)
    n = len(basis)
    rows: List[List[Fraction]] = [[Fraction(0)] * n for _ in range(n)]
    for i in range(n):
        for j in range(i, n):
            rows[i][j] = rows[j][i] = f(basis[i], basis[j])
    return GramMatrix(tuple(basis), tuple(tuple(r) for r in rows))
