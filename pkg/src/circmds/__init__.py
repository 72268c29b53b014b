"""Circulant matrix analysis over GF(2^m).

Decides MDS, involutory, orthogonal, semi-involutory and semi-orthogonal
properties of matrices over binary extension fields, recovers the diagonal
pairs behind the semi-properties, and verifies the trace relations between
those diagonals and the MDS property by exhaustive and seeded-random scans.
"""

from .circulant import build, interleaved_sums, is_circulant, row_sum
from .field import GF2m, get_field
from .matgf import det, diag_trace, identity, inverse, mat_mul, sandwich, submatrix, trace, transpose
from .props import (
    Classification,
    DiagonalPair,
    MdsVerdict,
    classify,
    diagonal_scaling_solve,
    is_involutory,
    is_mds,
    is_nonperiodic,
    is_orthogonal,
    power_scalar,
    semi_involutory_check,
    semi_orthogonal_check,
)
from .verify import (
    ScanConfig,
    ScanReport,
    oracle_semi_search,
    run_suite,
    verification_plan,
    verify_example,
)

__version__ = "0.1.0"

__all__ = [
    "GF2m", "get_field",
    "build", "is_circulant", "row_sum", "interleaved_sums",
    "mat_mul", "transpose", "identity", "inverse", "det", "submatrix",
    "trace", "diag_trace", "sandwich",
    "MdsVerdict", "DiagonalPair", "Classification",
    "is_mds", "is_involutory", "is_orthogonal",
    "diagonal_scaling_solve", "semi_orthogonal_check", "semi_involutory_check",
    "power_scalar", "is_nonperiodic", "classify",
    "ScanConfig", "ScanReport", "run_suite", "oracle_semi_search",
    "verify_example", "verification_plan",
]
