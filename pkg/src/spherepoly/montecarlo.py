"""Monte Carlo estimates of sphere averages, used as a floating-point oracle.

Points are drawn by normalizing standard Gaussian vectors.  The generator is
numpy's PCG64; sampling is split into fixed-size chunks, and chunk ``i``
draws from the ``i``-th child of ``SeedSequence(seed)``.  Results depend only
on ``(seed, samples)``, never on how chunks are scheduled.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, List, Tuple

import numpy as np

from .pairing import SphereSpec, sphere_inner
from .poly import Polynomial, parse_poly

CHUNK = 1 << 15


@dataclass(frozen=True)
class MCEstimate:
    mean: float
    standard_error: float
    samples: int
    seed: int


@dataclass(frozen=True)
class MCCheck:
    """Outcome of comparing an exact sphere pairing with its Monte Carlo estimate."""

    p: Polynomial
    q: Polynomial
    spec: SphereSpec
    exact: Fraction
    estimate: MCEstimate
    z: float

    @property
    def discrepancy(self) -> float:
        return abs(self.estimate.mean - float(self.exact))

    @property
    def passed(self) -> bool:
        return self.discrepancy <= self.z * self.estimate.standard_error

    def as_dict(self) -> dict:
        return {
            "p": str(self.p),
            "q": str(self.q),
            "N": self.spec.N,
            "a2": str(self.spec.a2),
            "exact": str(self.exact),
            "mean": self.estimate.mean,
            "standard_error": self.estimate.standard_error,
            "z_score": (
                self.discrepancy / self.estimate.standard_error
                if self.estimate.standard_error
                else 0.0 if self.discrepancy == 0 else float("inf")
            ),
            "passed": self.passed,
        }


def _chunk_sizes(count: int) -> List[int]:
    full, rest = divmod(count, CHUNK)
    return [CHUNK] * full + ([rest] if rest else [])


def sample_sphere(N: int, a: float, seed: int, count: int) -> Iterator[np.ndarray]:
    """Yield arrays of shape ``(chunk, N)`` of uniform points on ``S^{N-1}(a)``, ``count`` in total."""
    if N < 1 or count < 1 or not a > 0:
        raise ValueError("need N >= 1, a > 0 and count >= 1")
    sizes = _chunk_sizes(count)
    children = np.random.SeedSequence(seed).spawn(len(sizes))
    for size, child in zip(sizes, children):
        g = np.random.Generator(np.random.PCG64(child)).standard_normal((size, N))
        norms = np.linalg.norm(g, axis=1, keepdims=True)
        yield a * g / norms


def evaluate_batch(p: Polynomial, points: np.ndarray) -> np.ndarray:
    """Evaluate ``p`` at each row of ``points`` (column ``j-1`` holds ``x_j``)."""
    out = np.zeros(points.shape[0])
    for m, c in p.items():
        term = np.full(points.shape[0], float(c))
        for j, e in m:
            term *= points[:, j - 1] ** e
        out += term
    return out


def mc_sphere_integral(p: Polynomial, s: SphereSpec, samples: int, seed: int) -> MCEstimate:
    if p.max_index > s.N:
        raise ValueError(f"polynomial uses x{p.max_index} but the ambient dimension is N={s.N}")
    a = float(np.sqrt(float(s.a2)))
    values = np.concatenate([evaluate_batch(p, pts) for pts in sample_sphere(s.N, a, seed, samples)])
    mean = float(values.mean())
    se = float(values.std(ddof=1) / np.sqrt(samples)) if samples > 1 else 0.0
    return MCEstimate(mean, se, samples, seed)


def mc_check(
    p: Polynomial, q: Polynomial, s: SphereSpec, samples: int, seed: int, z: float = 5.0
) -> MCCheck:
    exact = sphere_inner(p, q, s)
    return MCCheck(p, q, s, exact, mc_sphere_integral(p * q, s, samples, seed), z)


_SUITE_TEXT: List[Tuple[str, str, int, str]] = [
    ("1", "1", 3, "N"),
    ("x1", "x1", 3, "N"),
    ("x1", "x2", 5, "N"),
    ("x1^2", "x1^2", 8, "8"),
    ("x1^2", "x2^2", 4, "N"),
    ("x1^3", "x1", 6, "N"),
    ("x1*x2", "x1*x2", 5, "2"),
    ("x1^2 - 1", "x1^2 - 1", 10, "N"),
    ("x1^4", "1", 7, "N"),
    ("x1^2*x2^2", "1", 4, "3/2"),
    ("x1 + x2", "x1 - x3", 3, "N"),
    ("x1^3 - 3*x1", "x1", 12, "N"),
    ("x1*x2*x3", "x1*x2*x3", 6, "N"),
    ("x1^2 + 2*x2^2 - x3^2", "1", 3, "5"),
    ("x1^6", "1", 9, "N"),
    ("x1^2*x2", "x2", 4, "N"),
    ("1/2*x1^2 - x2", "x1^2 + x2", 5, "N"),
    ("x1^4 - 6*x1^2 + 3", "1", 20, "N"),
    ("x2^3", "x2*x4", 4, "7/3"),
    ("x1^2*x2^2*x3^2", "1", 6, "N"),
]


def builtin_suite() -> List[Tuple[Polynomial, Polynomial, SphereSpec]]:
    """Twenty fixed (p, q, sphere) cases spanning parities, degrees and radii."""
    out = []
    for p, q, N, a2 in _SUITE_TEXT:
        out.append((parse_poly(p), parse_poly(q), SphereSpec(N, Fraction(N if a2 == "N" else a2))))
    return out


def run_builtin_suite(samples: int = 100_000, seed: int = 42, z: float = 5.0) -> List[MCCheck]:
    # case i uses seed + i so the cases are independent of one another
    return [mc_check(p, q, s, samples, seed + i, z) for i, (p, q, s) in enumerate(builtin_suite())]
