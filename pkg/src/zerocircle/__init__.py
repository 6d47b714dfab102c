"""Approximation by polynomials and Blaschke products whose zeros lie on a circle."""
from .annulus import AnnulusTriple, count_representations, decompose
from .blaschke import (
    BlaschkeApproximant,
    approximate_blaschke,
    blaschke_factor,
    blaschke_zeros,
    eval_blaschke,
    to_blaschke,
)
from .errors import *  # noqa: F401,F403
from .functions import FunctionSpec, parse_function_spec
from .matching import (
    CircleFactor,
    FactorProduct,
    approximant_constant,
    approximate,
    approximate_to_tolerance,
    evaluate_product,
    expand_product,
    formal_match_direct,
    logderiv_of_factors,
    match_factors,
    tail_bound,
    verify_nu_bound,
)
from .rmt import approx_probability, char_poly, logderiv_tuple, sample_haar
from .series import (
    GrowthBound,
    TruncatedSeries,
    fit_growth_bound,
    log_derivative,
    scale_argument,
    series_from_function,
    series_mul,
    series_reciprocal,
)
from .transport import (
    DiscSpec,
    MobiusMap,
    approx_blaschke_on_disc,
    approx_poly_on_disc,
    factor_prescribed_zeros,
    pseudohyperbolic_distance,
    rubinstein_approx,
    to_disc_spec,
)

__version__ = "0.1.0"
