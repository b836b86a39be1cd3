"""Exact Hankel determinants of linear combinations of moments."""

from .identity import (
    LinearCombination,
    PointConfiguration,
    lambda_from_points,
    lhs_hankel,
    verify_theorem1,
)
from .orthopoly import RecurrenceCoeffs, build_family, hankel_base_det, moments_from_coeffs
from .recurrence import charpoly_tensor, fit_recurrence, scaled_hankel_seq, synthesize_recurrence
from .sequences import get_sequence, registry

__version__ = "0.1.0"

__all__ = [
    "LinearCombination",
    "PointConfiguration",
    "RecurrenceCoeffs",
    "build_family",
    "charpoly_tensor",
    "fit_recurrence",
    "get_sequence",
    "hankel_base_det",
    "lambda_from_points",
    "lhs_hankel",
    "moments_from_coeffs",
    "registry",
    "scaled_hankel_seq",
    "synthesize_recurrence",
    "verify_theorem1",
]
