"""GF(2) linear algebra: parity-check matrices, codes and the affine model counter."""

from .matrix import (
    F2Matrix,
    rank,
    reduced_row_echelon,
    sample_parity_check,
    write_matrix,
    parse_matrix,
)
from .code import (
    LinearCode,
    nullspace_basis,
    enumerate_codewords,
    is_codeword,
    affine_model_count,
    code_truth_table,
)

__all__ = [
    'F2Matrix',
    'rank',
    'reduced_row_echelon',
    'sample_parity_check',
    'write_matrix',
    'parse_matrix',
    'LinearCode',
    'nullspace_basis',
    'enumerate_codewords',
    'is_codeword',
    'affine_model_count',
    'code_truth_table',
]
