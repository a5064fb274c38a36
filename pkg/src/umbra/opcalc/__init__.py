"""Operator calculus via the Fourier representation.

Quadrature engine, truncated-operator oracles, formal disentanglement checks,
series-level operators, and the evolution/transform operations built on them.
"""

from .formal import FormalExpansion, OperatorTerm, cubic_disentangle_check, weyl_check
from .fourier import (
    GridFunction,
    big_o_on_monomial,
    gabor_like_transform,
    heat_evolve_ft,
    integro_diff_evolve,
    matrix_function_pauli,
    monomial_from_hermite,
    phi_shift_transform,
    tricomi_evolution,
    umbral_operator_transform,
)
from .operators import (
    TruncatedOperator,
    ValidityWarning,
    derivative_op,
    identity_op,
    laguerre_derivative_op,
    neg_derivative_op,
    polyval_coeffs,
    second_derivative_plus_x_op,
    x_multiply_op,
)
from .oracles import (
    apply_entire_function,
    c0_series,
    integro_matrix_oracle,
    pauli_argument_matrix,
    pauli_spectral,
    tricomi_evolution_series,
    umbral_double_sum,
)
from .quadrature import (
    FourierSymbol,
    QuadratureConvergenceWarning,
    QuadratureResult,
    QuadratureRule,
    adaptive_hermite,
    cos_gaussian_symbol,
    gauss_hermite_rule,
    gauss_weighted_integral,
    gaussian_fourier_integral,
    gaussian_symbol,
    gaussian_taylor,
    legendre_composite_rule,
)
from .series_ops import (
    borel_transform,
    commutator_check_LD,
    exp_laguerre_derivative,
    exp_negD,
    laguerre_derivative,
    neg_derivative_pow,
    x_multiply,
)

__all__ = [
    "FormalExpansion",
    "OperatorTerm",
    "cubic_disentangle_check",
    "weyl_check",
    "GridFunction",
    "big_o_on_monomial",
    "gabor_like_transform",
    "heat_evolve_ft",
    "integro_diff_evolve",
    "matrix_function_pauli",
    "monomial_from_hermite",
    "phi_shift_transform",
    "tricomi_evolution",
    "umbral_operator_transform",
    "TruncatedOperator",
    "ValidityWarning",
    "derivative_op",
    "identity_op",
    "laguerre_derivative_op",
    "neg_derivative_op",
    "polyval_coeffs",
    "second_derivative_plus_x_op",
    "x_multiply_op",
    "apply_entire_function",
    "c0_series",
    "integro_matrix_oracle",
    "pauli_argument_matrix",
    "pauli_spectral",
    "tricomi_evolution_series",
    "umbral_double_sum",
    "FourierSymbol",
    "QuadratureConvergenceWarning",
    "QuadratureResult",
    "QuadratureRule",
    "adaptive_hermite",
    "cos_gaussian_symbol",
    "gauss_hermite_rule",
    "gauss_weighted_integral",
    "gaussian_fourier_integral",
    "gaussian_symbol",
    "gaussian_taylor",
    "legendre_composite_rule",
    "borel_transform",
    "commutator_check_LD",
    "exp_laguerre_derivative",
    "exp_negD",
    "laguerre_derivative",
    "neg_derivative_pow",
    "x_multiply",
]
