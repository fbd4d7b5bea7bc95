"""Footprint bounds, Groebner bases, Hermite interpolation and
evaluation codes for polynomials with derivative conditions on finite
grids over prime fields."""

from .bounds import (
    NO_INFORMATION,
    BoundReport,
    ComparisonTable,
    alon_furedi_nonzeros,
    alon_witness,
    classical_footprint_bound,
    comparison_table,
    demillo_lipton_general_bound,
    demillo_lipton_nonzeros,
    footprint_bound,
    lm_footprint_bound,
    multiplicity_footprint_bound,
    nullstellensatz_witness,
    per_coordinate_footprint_bound,
    schwartz_zippel_weighted,
    staircase_removed_count,
    sz_count_bound,
    sz_rhs,
    weighted_footprint_bound,
    weighted_nullstellensatz_witness,
    whole_grid_check,
)
from .field import PrimeField, binomial_mod_p, is_prime
from .grid import Grid
from .groebner import (
    Footprint,
    GroebnerBasis,
    Ideal,
    InfiniteFootprintError,
    augment_ideal,
    buchberger,
    divide,
    footprint,
    grid_ideal_basis,
    grid_products,
    ideal_equal,
    s_polynomial,
    vanishing_ideal,
)
from .hermite import (
    EvaluationCode,
    EvaluationMatrix,
    build_code,
    code_distance,
    evaluation_matrix,
    export_generator_matrix,
    hermite_interpolate,
    hermite_interpolate_unique,
    hermite_univariate_basis,
    reduce_mod_grid,
)
from .limits import DEFAULT_MAX_ENUM, EnumerationLimitError, max_enum
from .multiindex import (
    DecreasingSet,
    coordinate_box,
    dominates,
    grid_expand,
    in_grid_expansion,
    minimal_complement,
    standard_ball,
    weighted_ball,
    weighted_order,
)
from .ordering import MonomialOrdering, grevlex, grlex, lex
from .oracle import (
    ZeroSet,
    equality_case_builder,
    multiplicity_sum,
    sz_sharp_construction,
    zeros_with_multiplicity,
)
from .polynomial import INFINITE, Polynomial, format_poly, monomial_hasse_at, parse_poly

__version__ = "1.0.0"

__all__ = [
    "NO_INFORMATION",
    "BoundReport",
    "ComparisonTable",
    "alon_furedi_nonzeros",
    "alon_witness",
    "classical_footprint_bound",
    "comparison_table",
    "demillo_lipton_general_bound",
    "demillo_lipton_nonzeros",
    "footprint_bound",
    "lm_footprint_bound",
    "multiplicity_footprint_bound",
    "nullstellensatz_witness",
    "per_coordinate_footprint_bound",
    "schwartz_zippel_weighted",
    "staircase_removed_count",
    "sz_count_bound",
    "sz_rhs",
    "weighted_footprint_bound",
    "weighted_nullstellensatz_witness",
    "whole_grid_check",
    "PrimeField",
    "binomial_mod_p",
    "is_prime",
    "Grid",
    "Footprint",
    "GroebnerBasis",
    "Ideal",
    "InfiniteFootprintError",
    "augment_ideal",
    "buchberger",
    "divide",
    "footprint",
    "grid_ideal_basis",
    "grid_products",
    "ideal_equal",
    "s_polynomial",
    "vanishing_ideal",
    "EvaluationCode",
    "EvaluationMatrix",
    "build_code",
    "code_distance",
    "evaluation_matrix",
    "export_generator_matrix",
    "hermite_interpolate",
    "hermite_interpolate_unique",
    "hermite_univariate_basis",
    "reduce_mod_grid",
    "DEFAULT_MAX_ENUM",
    "EnumerationLimitError",
    "max_enum",
    "DecreasingSet",
    "coordinate_box",
    "dominates",
    "grid_expand",
    "in_grid_expansion",
    "minimal_complement",
    "standard_ball",
    "weighted_ball",
    "weighted_order",
    "MonomialOrdering",
    "grevlex",
    "grlex",
    "lex",
    "ZeroSet",
    "equality_case_builder",
    "multiplicity_sum",
    "sz_sharp_construction",
    "zeros_with_multiplicity",
    "INFINITE",
    "Polynomial",
    "format_poly",
    "monomial_hasse_at",
    "parse_poly",
]
