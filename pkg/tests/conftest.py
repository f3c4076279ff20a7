from fractions import Fraction

from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from spherepoly.poly import Monomial, Polynomial

settings.register_profile(
    "default", max_examples=60, deadline=None, suppress_health_check=[HealthCheck.too_slow]
)
settings.load_profile("default")

small_fractions = st.builds(
    Fraction, st.integers(-9, 9), st.sampled_from([1, 1, 2, 3, 5])
)


def monomials(nvars: int = 3, max_exp: int = 3):
    return st.dictionaries(st.integers(1, nvars), st.integers(0, max_exp), max_size=nvars).map(Monomial)


def polys(nvars: int = 3, max_exp: int = 3, max_terms: int = 5):
    return st.dictionaries(monomials(nvars, max_exp), small_fractions, max_size=max_terms).map(Polynomial)


def homogeneous_polys(degree: int, nvars: int = 3, max_terms: int = 4):
    def to_mono(picks):
        exps = {}
        for j in picks:
            exps[j] = exps.get(j, 0) + 1
        return Monomial(exps)

    mono = st.lists(st.integers(1, nvars), min_size=degree, max_size=degree).map(to_mono)
    return st.dictionaries(mono, small_fractions, max_size=max_terms).map(Polynomial)
