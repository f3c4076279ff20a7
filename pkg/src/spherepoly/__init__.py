"""Exact polynomial analysis on spheres and its Gaussian limit as the dimension grows."""

from .harmonic import (
    HarmonicExpansion,
    NoRepresentativeError,
    SphereRemainder,
    La_project,
    base_r2_expansion,
    harmonic_decompose,
    in_sphere_ideal,
    minimal_representative,
    reduce_mod_sphere,
)
from .montecarlo import MCCheck, MCEstimate, mc_check, mc_sphere_integral, sample_sphere
from .operators import apply_Mjk, casimir, euler, laplacian, norm_sq_times
from .ortho import (
    LimitTable,
    OrthogonalFamily,
    gauss_projection_complement,
    gegenbauer_monic,
    hermite_poly,
    limit_table,
    sphere_projection_complement,
    zonal_harmonic,
    zonal_poly,
)
from .pairing import (
    GramMatrix,
    SphereSpec,
    adN_factor,
    degree_factor,
    gaussian_inner,
    gram_matrix,
    hermite_inner,
    sphere_integral,
    sphere_inner,
)
from .poly import (
    Monomial,
    PolyLimitError,
    PolySyntaxError,
    Polynomial,
    evaluate,
    format_poly,
    parse_poly,
    partial_derivative,
    substitute_linear,
)
from .sphere_laplacian import SlapResult, hermite_operator, slap_limit_error, sphere_laplacian

__version__ = "0.1.0"

__all__ = [
    "adN_factor",
    "apply_Mjk",
    "base_r2_expansion",
    "casimir",
    "degree_factor",
    "euler",
    "evaluate",
    "format_poly",
    "gauss_projection_complement",
    "gaussian_inner",
    "gegenbauer_monic",
    "gram_matrix",
    "GramMatrix",
    "harmonic_decompose",
    "HarmonicExpansion",
    "hermite_inner",
    "hermite_operator",
    "hermite_poly",
    "in_sphere_ideal",
    "La_project",
    "laplacian",
    "limit_table",
    "LimitTable",
    "mc_check",
    "mc_sphere_integral",
    "MCCheck",
    "MCEstimate",
    "minimal_representative",
    "Monomial",
    "NoRepresentativeError",
    "norm_sq_times",
    "OrthogonalFamily",
    "parse_poly",
    "partial_derivative",
    "PolyLimitError",
    "Polynomial",
    "PolySyntaxError",
    "reduce_mod_sphere",
    "sample_sphere",
    "slap_limit_error",
    "SlapResult",
    "sphere_inner",
    "sphere_integral",
    "sphere_laplacian",
    "sphere_projection_complement",
    "SphereRemainder",
    "SphereSpec",
    "substitute_linear",
    "zonal_harmonic",
    "zonal_poly",
]
