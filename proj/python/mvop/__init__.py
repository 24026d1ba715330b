"""Matrix-valued orthogonal polynomials from one-step spherical functions."""

from ._core import (
    NumericError,
    ParameterError,
    Params,
    blocks,
    eigenfunction,
    gram,
    lambda_eig,
    m_lambda,
    mu_eig,
    three_term_residual,
    verify,
    walk,
)

__all__ = [
    "NumericError",
    "ParameterError",
    "Params",
    "blocks",
    "eigenfunction",
    "gram",
    "lambda_eig",
    "m_lambda",
    "mu_eig",
    "three_term_residual",
    "verify",
    "walk",
]
