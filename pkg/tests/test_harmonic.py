from fractions import Fraction
from math import factorial, prod

import pytest
from conftest import homogeneous_polys, polys
from hypothesis import given
from hypothesis import strategies as st

from spherepoly.harmonic import (
    NoRepresentativeError,
    La_project,
    base_r2_expansion,
    harmonic_decompose,
    in_sphere_ideal,
    minimal_representative,
    reduce_mod_sphere,
)
from spherepoly.operators import apply_Mjk, casimir, laplacian, norm_sq_times
from spherepoly.pairing import SphereSpec, sphere_inner
from spherepoly.poly import Polynomial, homogeneous_components, norm_sq
from spherepoly.suites import harmonic_eigenrelation, random_cases

x1, x2, x3 = (Polynomial.var(j) for j in (1, 2, 3))
specs = st.builds(
    SphereSpec, st.integers(3, 5), st.builds(Fraction, st.integers(1, 9), st.integers(1, 3))
)


def projection_oracle(p: Polynomial, N: int) -> Polynomial:
    """Harmonic part of a homogeneous p by the classical alternating series in |x|^2 and the Laplacian."""
    m = p.degree
    out, lap = Polynomial(), p
    for j in range(m // 2 + 1):
        denom = 2**j * factorial(j) * prod(N + 2 * m - 2 - 2 * i for i in range(1, j + 1))
        out = out + norm_sq(N) ** j * lap * Fraction((-1) ** j, denom)
        lap = laplacian(lap, N)
    return out


class TestDecompose:
    @pytest.mark.parametrize("N", [1, 2, 3, 5, 8])
    def test_examples(self, N):
        assert harmonic_decompose(x1**2, N) == (x1**2 - norm_sq(N) / N, Polynomial.constant(Fraction(1, N)))
        c = Fraction(3, N + 2)
        assert harmonic_decompose(x1**3, N) == (x1**3 - norm_sq(N) * x1 * c, x1 * c)
        if N >= 2:
            assert harmonic_decompose(x1 * x2, N) == (x1 * x2, Polynomial())

    def test_zero(self):
        assert harmonic_decompose(Polynomial(), 3) == (Polynomial(), Polynomial())
        assert base_r2_expansion(Polynomial(), 3).components == ()

    @given(st.integers(0, 6).flatmap(lambda d: homogeneous_polys(d, nvars=4)), st.integers(4, 7))
    def test_matches_closed_form(self, p, N):
        assert harmonic_decompose(p, N)[0] == projection_oracle(p, N)

    @given(polys(nvars=3, max_exp=3), st.integers(3, 6))
    def test_harmonic_and_reassembles(self, p, N):
        p0, q = harmonic_decompose(p, N)
        assert laplacian(p0, N) == 0
        assert p0 + norm_sq_times(q, N) == p

    @given(polys(nvars=3, max_exp=2), st.integers(3, 5))
    def test_uniqueness(self, q, N):
        # |x|^2 q has no harmonic part, so the decomposition must return q itself
        assert harmonic_decompose(norm_sq_times(q, N), N) == (Polynomial(), q)

    def test_random_suite(self):
        for p, N in random_cases(5, 60, max_N=6, max_degree=6):
            p0, q = harmonic_decompose(p, N)
            assert laplacian(p0, N) == 0 and p0 + norm_sq_times(q, N) == p
            assert harmonic_eigenrelation(p, N)

    def test_dimension_check(self):
        with pytest.raises(ValueError):
            harmonic_decompose(x3, 2)


class TestExpansion:
    def test_examples(self):
        assert base_r2_expansion(norm_sq(4), 4).components == (Polynomial(), Polynomial.constant(1))
        assert base_r2_expansion(x1**2, 3).components == (x1**2 - norm_sq(3) / 3, Polynomial.constant(Fraction(1, 3)))
        h = x1 * x2 + x1**2 - x2**2
        assert base_r2_expansion(h, 2).components == (h,)
        h = x1 * x2 * x3
        assert base_r2_expansion(h, 3).components == (h,)

    @given(polys(nvars=3, max_exp=3), st.integers(3, 5))
    def test_invariants(self, p, N):
        exp = base_r2_expansion(p, N)
        assert exp.reassemble() == p
        assert all(laplacian(c, N) == 0 for c in exp.components)
        assert len(exp.components) <= max(p.degree, 0) // 2 + 1


class TestLa:
    def test_examples(self):
        for N in (3, 5):
            s = SphereSpec(N, Fraction(7, 2))
            assert La_project(norm_sq(N), s) == s.a2
            q3 = x1**3 - x1 * (3 * s.a2 / (N + 2))
            assert La_project(q3, s) == x1**3 - norm_sq(N) * x1 * Fraction(3, N + 2)
            assert La_project(x1 * x2, s) == x1 * x2
            assert La_project(Polynomial.constant(4), s) == 4

    @given(polys(nvars=3, max_exp=3), specs)
    def test_idempotent_and_agrees_on_sphere(self, p, s):
        lp = La_project(p, s)
        assert La_project(lp, s) == lp
        assert laplacian(lp, s.N) == 0
        assert in_sphere_ideal(p - lp, s)

    @given(polys(nvars=3, max_exp=3), specs)
    def test_kernel_is_sphere_ideal(self, p, s):
        assert (La_project(p, s) == 0) == in_sphere_ideal(p, s)
        z = p * (norm_sq(s.N) - s.a2)
        assert La_project(z, s) == 0

    @given(polys(nvars=3, max_exp=3), specs, st.sampled_from([(1, 2), (2, 3), (1, 3)]))
    def test_commutes_with_rotations(self, p, s, jk):
        assert La_project(apply_Mjk(*jk, p), s) == apply_Mjk(*jk, La_project(p, s))

    @given(polys(nvars=3, max_exp=2), specs)
    def test_commutes_with_casimir(self, p, s):
        assert La_project(casimir(p, s.N), s) == casimir(La_project(p, s), s.N)

    @given(polys(nvars=3, max_exp=2), polys(nvars=3, max_exp=2), specs)
    def test_self_adjoint(self, p, q, s):
        assert sphere_inner(La_project(p, s), q, s) == sphere_inner(p, La_project(q, s), s)

    @given(st.integers(0, 4), st.integers(0, 4), polys(nvars=3, max_exp=4, max_terms=6), specs)
    def test_harmonic_degrees_orthogonal(self, m, n, p, s):
        comps = homogeneous_components(harmonic_decompose(p, s.N)[0])
        if m != n and m in comps and n in comps:
            assert sphere_inner(comps[m], comps[n], s) == 0


class TestReduce:
    def test_examples(self):
        s = SphereSpec(3, 5)
        r = reduce_mod_sphere(norm_sq(3) - 5, s)
        assert r.remainder == 0 and r.quotient == 1
        r = reduce_mod_sphere(x2**2, SphereSpec(2, 4))
        assert r.remainder == 4 - x1**2 and r.quotient == 1

    @given(polys(nvars=3, max_exp=5), specs)
    def test_division_identity(self, p, s):
        r = reduce_mod_sphere(p, s)
        assert r.quotient * (norm_sq(s.N) - s.a2) + r.remainder == p
        assert r.remainder.degree_in(s.N) <= 1

    @given(polys(nvars=3, max_exp=3), specs)
    def test_normal_form_is_canonical(self, p, s):
        z = (x1 + 2 * x3) * (norm_sq(s.N) - s.a2)
        assert reduce_mod_sphere(p + z, s).remainder == reduce_mod_sphere(p, s).remainder


class TestMinimalRepresentative:
    @pytest.mark.parametrize("m", range(0, 6))
    @pytest.mark.parametrize("N", [2, 3, 6])
    def test_casimir_of_power(self, m, N):
        s = SphereSpec.standard(N)
        expected = x1**m * (-m * (N - 1))
        if m >= 2:
            expected = expected + (N - x1**2) * x1 ** (m - 2) * (m * (m - 1))
        assert minimal_representative(casimir(x1**m, N), 1, s) == expected

    def test_already_minimal(self):
        p = x1**3 - x2 + 1
        assert minimal_representative(p, 2, SphereSpec(4, 3)) == p

    def test_no_representative(self):
        with pytest.raises(NoRepresentativeError):
            minimal_representative(Polynomial.var(3), 1, SphereSpec(3))
        with pytest.raises(ValueError):
            minimal_representative(x1, 3, SphereSpec(3))
