"""Exact construction and verification of multiple Meixner polynomials of
the first kind, together with their oscillator model on truncated Fock
spaces."""

from .algebra import PolyX, RatFuncC, binom_poly, format_rational, parse_rational, pochhammer
from .genfun import SeriesZ, genfun_coeffs, oracle_compare, series_mul
from .meixner import (
    MeixnerTable,
    Params,
    check_diffeq_beta,
    check_diffeq_x,
    check_non_nearest,
    check_pairwise,
    check_relation,
    mm_eval,
    mm_poly,
)
from .moments import moment_ratio, orthogonality_check, truncated_sum_check
from .report import RelationReport

__version__ = "0.1.0"

__all__ = [
    "MeixnerTable", "Params", "PolyX", "RatFuncC", "RelationReport", "SeriesZ",
    "binom_poly", "check_diffeq_beta", "check_diffeq_x", "check_non_nearest", "check_pairwise",
    "check_relation", "format_rational", "genfun_coeffs", "mm_eval", "mm_poly", "moment_ratio",
    "oracle_compare", "orthogonality_check", "parse_rational", "pochhammer", "series_mul",
    "truncated_sum_check",
]
