"""Exact scalars, polynomials, matrices and determinant kernels."""

from .matrix import (
    DimensionError,
    RatMatrix,
    char_poly,
    det_condensation,
    det_fraction_free,
    exact_div,
    jacobi_identity_check,
    kronecker_product,
    rref_solve,
    vandermonde_product,
)
from .multipoly import MultiPoly
from .poly import UniPoly, poly_taylor_coeff
from .rational import (
    RationalParseError,
    format_rational,
    parse_rational,
    parse_rational_list,
    to_rational,
)
from .symmetric import SymmetryError, elementary_symmetric, expand_elementary, sym_reduce

__all__ = [
    "DimensionError",
    "MultiPoly",
    "RatMatrix",
    "RationalParseError",
    "SymmetryError",
    "UniPoly",
    "char_poly",
    "det_condensation",
    "det_fraction_free",
    "elementary_symmetric",
    "exact_div",
    "expand_elementary",
    "format_rational",
    "jacobi_identity_check",
    "kronecker_product",
    "parse_rational",
    "parse_rational_list",
    "poly_taylor_coeff",
    "rref_solve",
    "sym_reduce",
    "to_rational",
    "vandermonde_product",
]
