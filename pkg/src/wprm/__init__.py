"""Weighted projective Reed-Muller codes over a weighted projective torus."""

from .binomial import (
    Binomial,
    in_defining_lattice,
    in_vanishing_ideal,
    is_homogeneous,
    scale_binomial,
    vanishes_on_affine_torus,
    weighted_degree,
)
from .codes import (
    CodeParameters,
    EvaluationCode,
    build_code,
    code_parameters,
    dimension,
    dimension_formula_1d,
    distance_formula_1d,
    is_mds,
    max_zeros_bound_1d,
    minimum_distance_bruteforce,
    parameter_table,
    standard_form,
)
from .errors import TooLarge, WPRMError
from .field import GF, FieldElement, field_new
from .hilbert import (
    HilbertSeries,
    IntegerPolynomial,
    hilbert_function,
    index_of_regularity,
    semigroup_hilbert_series,
    torus_hilbert_series,
)
from .semigroup import (
    HerzogGenerator,
    NumericalSemigroup,
    factorization_count,
    herzog_condition,
    herzog_condition_any_order,
    herzog_generators,
    semigroup_new,
)
from .torus import TorusPoint, lemma_point, monomials_of_degree, orbit_of, torus_points

__version__ = "0.1.0"
