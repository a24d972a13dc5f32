"""Longest common increasing subsequence solvers."""

from .core import (TOP, LcisResult, ReconstructionError, beta, delta,
                   is_common_increasing, is_strictly_increasing, is_subsequence)
from .full_dp import DpTable, full_table, lcis_length_from_table
from .linear_dp import RowState, lcis_length_linear, reconstruct, solve
from .oracle import MAX_ORACLE_LENGTH, OracleBoundError, OracleResult, oracle_lcis

__all__ = [
    "TOP", "LcisResult", "ReconstructionError", "beta", "delta",
    "is_common_increasing", "is_strictly_increasing", "is_subsequence",
    "DpTable", "full_table", "lcis_length_from_table",
    "RowState", "lcis_length_linear", "reconstruct", "solve",
    "MAX_ORACLE_LENGTH", "OracleBoundError", "OracleResult", "oracle_lcis",
]
