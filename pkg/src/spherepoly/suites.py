"""Seeded random polynomials and the named verification suites behind ``verify``."""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Dict, List, Tuple

from .harmonic import La_project, base_r2_expansion, harmonic_decompose, in_sphere_ideal, reduce_mod_sphere
from .montecarlo import run_builtin_suite
from .operators import apply_Mjk, casimir, euler, laplacian, norm_sq_times
from .ortho import gegenbauer_zonal, limit_table, zonal_poly
from .pairing import SphereSpec, hermite_inner, sphere_inner
from .poly import Monomial, Polynomial, homogeneous_components, parse_poly
from .sphere_laplacian import sphere_laplacian


@dataclass(frozen=True)
class PropertyResult:
    name: str
    passed: bool
    checked: int
    detail: str = ""

    def as_dict(self) -> dict:
        return {"property": self.name, "passed": self.passed, "checked": self.checked, "detail": self.detail}


def random_poly(rng: random.Random, nvars: int, degree: int, terms: int = 5, coeff: int = 9) -> Polynomial:
    """Sum of up to ``terms`` random monomials in ``x_1..x_nvars`` of degree ``<= degree``."""
    out: Dict[Monomial, Fraction] = {}
    for _ in range(terms):
        d = rng.randint(0, degree)
        exps: Dict[int, int] = {}
        for _ in range(d):
            j = rng.randint(1, nvars)
            exps[j] = exps.get(j, 0) + 1
        num = rng.randint(-coeff, coeff)
        den = rng.choice((1, 1, 1, 2, 3))
        out[Monomial(exps)] = out.get(Monomial(exps), 0) + Fraction(num, den)
    return Polynomial(out)


def random_cases(seed: int, count: int, max_N: int = 6, max_degree: int = 6) -> List[Tuple[Polynomial, int]]:
    """``count`` pairs ``(p, N)`` with ``2 <= N <= max_N`` and ``p`` in ``x_1..x_N``."""
    rng = random.Random(seed)
    out = []
    for _ in range(count):
        N = rng.randint(2, max_N)
        out.append((random_poly(rng, N, rng.randint(0, max_degree), terms=rng.randint(1, 5)), N))
    return out


def random_pairs(seed: int, count: int, max_N: int = 5, max_degree: int = 4) -> List[Tuple[Polynomial, Polynomial, int]]:
    """``count`` triples ``(p, q, N)`` with both polynomials in ``x_1..x_N``."""
    rng = random.Random(seed)
    out = []
    for _ in range(count):
        N = rng.randint(2, max_N)
        p = random_poly(rng, N, rng.randint(0, max_degree), terms=rng.randint(1, 5))
        q = random_poly(rng, N, rng.randint(0, max_degree), terms=rng.randint(1, 5))
        out.append((p, q, N))
    return out


def _check(name: str, cases, pred: Callable[..., bool]) -> PropertyResult:
    bad = 0
    first = ""
    for case in cases:
        if not pred(*case):
            bad += 1
            if not first:
                first = "first failure: " + ", ".join(str(c) for c in case)
    return PropertyResult(name, bad == 0, len(cases), first)


def casimir_identity(p: Polynomial, N: int) -> bool:
    """``|x|^2 Laplacian p == E^2 p + (N-2) E p + casimir p``."""
    e = euler(p)
    return norm_sq_times(laplacian(p, N), N) == euler(e) + e * (N - 2) + casimir(p, N)


def harmonic_eigenrelation(p: Polynomial, N: int) -> bool:
    p0, _ = harmonic_decompose(p, N)
    return all(
        casimir(h, N) == h * (-m * (m + N - 2)) for m, h in homogeneous_components(p0).items()
    )


def _identity_suite(seed: int) -> List[PropertyResult]:
    cases = random_cases(seed, 60, max_N=5, max_degree=5)
    pairs = [(p, N, 1, N) for p, N in cases]
    return [
        _check("casimir_identity", cases, casimir_identity),
        _check(
            "Mjk_commutes_with_laplacian",
            pairs,
            lambda p, N, j, k: apply_Mjk(j, k, laplacian(p, N)) == laplacian(apply_Mjk(j, k, p), N),
        ),
        _check(
            "Mjk_commutes_with_norm_sq",
            pairs,
            lambda p, N, j, k: apply_Mjk(j, k, norm_sq_times(p, N)) == norm_sq_times(apply_Mjk(j, k, p), N),
        ),
        _check(
            "laplacian_adjoint_of_norm_sq",
            random_pairs(seed + 1, 60, max_degree=5),
            lambda p, q, N: hermite_inner(laplacian(p, N), q) == hermite_inner(p, norm_sq_times(q, N)),
        ),
        _check(
            "Mjk_skew_on_sphere",
            random_pairs(seed + 2, 60),
            lambda p, q, N: sphere_inner(apply_Mjk(1, N, p), q, SphereSpec(N))
            == -sphere_inner(p, apply_Mjk(1, N, q), SphereSpec(N)),
        ),
    ]


def _harmonic_suite(seed: int) -> List[PropertyResult]:
    cases = random_cases(seed, 40, max_N=5, max_degree=5)
    spec_cases = [(p, SphereSpec(N, Fraction(N + 1, 2))) for p, N in cases]
    return [
        _check("decomposition_reassembles", cases, lambda p, N: base_r2_expansion(p, N).reassemble() == p),
        _check(
            "components_harmonic",
            cases,
            lambda p, N: all(not laplacian(h, N) for h in base_r2_expansion(p, N).components),
        ),
        _check("harmonic_eigenrelation", cases, harmonic_eigenrelation),
        _check("La_idempotent", spec_cases, lambda p, s: La_project(La_project(p, s), s) == La_project(p, s)),
        _check("La_agrees_on_sphere", spec_cases, lambda p, s: in_sphere_ideal(La_project(p, s) - p, s)),
        _check(
            "La_commutes_with_Mjk",
            spec_cases,
            lambda p, s: La_project(apply_Mjk(1, s.N, p), s) == apply_Mjk(1, s.N, La_project(p, s)),
        ),
    ]


def _laplacian_suite(seed: int) -> List[PropertyResult]:
    powers = [(m, N) for m in range(9) for N in range(3, 13)]

    def power_formula(m: int, N: int) -> bool:
        x = parse_poly("x1")
        rhs = x**m * Fraction(-m * (N - 1), N)
        if m >= 2:
            rhs = rhs + (1 - x * x / N) * x ** (m - 2) * (m * (m - 1))
        return sphere_laplacian(x**m, SphereSpec.standard(N)).value == rhs

    rng = random.Random(seed)
    cases = []
    for _ in range(60):
        N = rng.randint(2, 6)
        p = random_poly(rng, N - 1, rng.randint(0, 5), terms=rng.randint(1, 5))
        cases.append((p, SphereSpec(N, Fraction(rng.randint(1, 9), rng.randint(1, 3)))))

    def oracle(p: Polynomial, s: SphereSpec) -> bool:
        value = sphere_laplacian(p, s).value
        return not reduce_mod_sphere(casimir(p, s.N) - value * s.a2, s).remainder

    return [
        _check("slap_power_formula", powers, power_formula),
        _check("slap_matches_casimir_mod_sphere", cases, oracle),
    ]


def _limits_suite(seed: int) -> List[PropertyResult]:
    Ns = [10, 100, 1000]

    def table_is(kind, payload, expected) -> bool:
        return limit_table(kind, payload, Ns).errors == [expected(N) for N in Ns]

    geg = [(m, SphereSpec(N, a2)) for m in range(7) for N in range(2, 11) for a2 in (Fraction(1), Fraction(N))]
    return [
        _check(
            "limit_closed_forms",
            [
                ("zonal_to_hermite", 3, lambda N: Fraction(6, N + 2)),
                ("inner_product", (parse_poly("x1^2"), parse_poly("x1^2")), lambda N: Fraction(6, N + 2)),
                ("slap_to_hermite", parse_poly("x1"), lambda N: Fraction(1, N)),
                ("projected_monomial", parse_poly("x1^2*x2"), lambda N: Fraction(2, N + 2)),
            ],
            table_is,
        ),
        _check("zonal_equals_scaled_gegenbauer", geg, lambda m, s: zonal_poly(m, s) == gegenbauer_zonal(m, s)),
    ]


def _mc_suite(seed: int, samples: int) -> List[PropertyResult]:
    checks = run_builtin_suite(samples=samples, seed=seed)
    passed = sum(c.passed for c in checks)
    failed = [f"{c.p} * {c.q} on N={c.spec.N}" for c in checks if not c.passed]
    return [
        PropertyResult(
            "mc_calibration_19_of_20",
            passed >= 19,
            len(checks),
            f"{passed}/{len(checks)} within 5 sigma" + (f"; outside: {failed}" if failed else ""),
        )
    ]


SUITES = ("identities", "harmonic", "laplacian", "limits", "mc", "all")


def run_suite(name: str, seed: int = 42, samples: int = 100_000) -> List[PropertyResult]:
    if name not in SUITES:
        raise KeyError(name)
    parts = {
        "identities": lambda: _identity_suite(seed),
        "harmonic": lambda: _harmonic_suite(seed),
        "laplacian": lambda: _laplacian_suite(seed),
        "limits": lambda: _limits_suite(seed),
        "mc": lambda: _mc_suite(seed, samples),
    }
    if name == "all":
        return [r for part in parts.values() for r in part()]
    return parts[name]()
