"""Exact coefficients of the series log(exp(A) exp(B))."""

from ._bchcoeffs import (
    MAX_DEGREE_FIXED64,
    MAX_DEGREE_FIXED128,
    ORACLE_MAX_DEGREE,
    BackendOverflow,
    InexactDivision,
    InvalidWord,
    OracleRangeExceeded,
    coefficient,
    coefficient_blocks,
    coefficient_table,
    coefficient_via_table,
    common_denominator,
    compute_dn,
    digit_sum,
    dynkin_terms,
    oracle_coefficient,
    partitions_up_to,
    verify_dynkin,
)

__all__ = [
    "MAX_DEGREE_FIXED64",
    "MAX_DEGREE_FIXED128",
    "ORACLE_MAX_DEGREE",
    "BackendOverflow",
    "InexactDivision",
    "InvalidWord",
    "OracleRangeExceeded",
    "coefficient",
    "coefficient_blocks",
    "coefficient_table",
    "coefficient_via_table",
    "common_denominator",
    "compute_dn",
    "digit_sum",
    "dynkin_terms",
    "oracle_coefficient",
    "partitions_up_to",
    "verify_dynkin",
]

__version__ = "1.0.0"
