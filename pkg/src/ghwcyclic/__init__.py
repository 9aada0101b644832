"""Generalized Hamming weights of irreducible cyclic codes."""

from .bounds import (
    bound_report,
    dual_generator_matrix,
    griesmer_like_bound,
    linear_code_hierarchy,
    plotkin_like_bound,
    singleton_bound,
    wei_duality,
)
from .characters import (
    GaussSumValue,
    MultiplicativeCharacter,
    gauss_sum_exact,
    gauss_sum_numeric,
    gauss_sum_quadratic,
    gauss_sum_semiprimitive,
)
from .cyclic_code import CodeSpec, build_code, encode, generator_matrix, weight_distribution
from .errors import CapExceededError, CrossCheckError, GHWError, InvalidParameterError, PrecisionError
from .finite_field import FieldSpec, build_field, discrete_log, rel_trace, subfield_elements
from .ghw import WeightHierarchy, ghw_closed_form, ghw_oracle, nr_formula33, nr_formula34, weight_hierarchy
from .subspaces import Subspace, gaussian_binomial, subspaces, support_size

__version__ = "0.1.0"

__all__ = [
    "CapExceededError",
    "CodeSpec",
    "CrossCheckError",
    "FieldSpec",
    "GHWError",
    "GaussSumValue",
    "InvalidParameterError",
    "MultiplicativeCharacter",
    "PrecisionError",
    "Subspace",
    "WeightHierarchy",
    "bound_report",
    "build_code",
    "build_field",
    "discrete_log",
    "dual_generator_matrix",
    "encode",
    "gauss_sum_exact",
    "gauss_sum_numeric",
    "gauss_sum_quadratic",
    "gauss_sum_semiprimitive",
    "gaussian_binomial",
    "generator_matrix",
    "ghw_closed_form",
    "ghw_oracle",
    "griesmer_like_bound",
    "linear_code_hierarchy",
    "nr_formula33",
    "nr_formula34",
    "plotkin_like_bound",
    "rel_trace",
    "singleton_bound",
    "subfield_elements",
    "subspaces",
    "support_size",
    "wei_duality",
    "weight_distribution",
    "weight_hierarchy",
]
