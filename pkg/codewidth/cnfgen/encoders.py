"""
The three CNF encodings of code membership.

All three track, for every equation i, the running parity z_{ij} of
a_{i1}x_1 + ... + a_{ij}x_j, with z_{i0} = 0 as a constant. They differ in
how the parity steps are grouped into constraints:

- naive:   one constraint per (i, j), final check as unit clauses;
- blockpw: one constraint per column j and block of b rows, modular
           pathwidth at most 2k - 1;
- nd:      one constraint per block of b rows and block of w = b columns
           over all of X plus the block-boundary accumulators, neighborhood
           diversity 1 + 2*c*k^2.
"""

import logging
from typing import Optional

from codewidth.f2code import F2Matrix
from .constraints import AbstractInstance, ConstraintBlock, ParityChain, materialize
from .formula import CnfFormula, GeneratorParams, Provenance
from .variables import X, Z, code_table

logger = logging.getLogger(__name__)


def _chain(matrix: F2Matrix, row: int, start: int, end: int, final: bool) -> ParityChain:
    coefficients = tuple(matrix.entry(row, j) for j in range(start + 1, end + 1))
    return ParityChain(row, start, end, coefficients, final)


def build_naive_instance(matrix: F2Matrix, params: Optional[GeneratorParams] = None) -> AbstractInstance:
    """
    Constraints a_{i1}x_1 = z_{i1} and z_{i,j-1} + a_{ij}x_j = z_{ij}, plus units not z_{in}.

    The encoding itself ignores `params`; they only feed the provenance.
    Without them the generator comment records k = max(m, 1), b = 1, c = 1
    and seed none.
    """
    m, n = matrix.num_rows, matrix.num_cols
    table = code_table(n, [Z(i, j) for i in range(1, m + 1) for j in range(1, n + 1)])
    blocks = []
    for i in range(1, m + 1):
        for j in range(1, n + 1):
            left = (Z(i, j - 1),) if j > 1 else ()
            blocks.append(ConstraintBlock(
                (X(j),) + left + (Z(i, j),),
                (_chain(matrix, i, j - 1, j, final=False),),
                label=f"E[{i},{j}]"))
    units = tuple(Z(i, n) for i in range(1, m + 1))
    if params is None:
        params = GeneratorParams(max(m, 1), 1, 1)
    provenance = Provenance("naive", params.k, params.b, params.c, params.seed)
    return AbstractInstance(table, tuple(blocks), units, provenance, matrix)


def build_blocked_instance(matrix: F2Matrix, params: GeneratorParams) -> AbstractInstance:
    """
    One constraint R_j^l per column j and row block l, over x_j and the
    block's accumulators at columns j-1 and j. The check z_{in} = 0 is part
    of R_n^l, so no unit clauses are emitted.

    Raises:
        ParameterMismatch: If m != k*b.
    """
    params.require_blocked(matrix)
    n, k, b = matrix.num_cols, params.k, params.b
    table = code_table(n, [Z(i, j) for i in range(1, k * b + 1) for j in range(1, n + 1)])
    blocks = []
    for j in range(1, n + 1):
        for ell in range(k):
            rows = range(ell * b + 1, (ell + 1) * b + 1)
            left = tuple(Z(i, j - 1) for i in rows) if j > 1 else ()
            right = tuple(Z(i, j) for i in rows)
            chains = tuple(_chain(matrix, i, j - 1, j, final=(j == n)) for i in rows)
            blocks.append(ConstraintBlock((X(j),) + left + right, chains, label=f"R[{j}]^{ell}"))
    provenance = Provenance("blockpw", k, b, params.c, params.seed)
    return AbstractInstance(table, tuple(blocks), (), provenance, matrix)


def build_nd_instance(matrix: F2Matrix, params: GeneratorParams) -> AbstractInstance:
    """
    One constraint R'_{r,s} per row block r and column block s of width
    w = b, over all of X and the accumulators at the block boundaries
    (s-1)w and sw. Interior accumulators are projected out; z_{i0} is the
    constant 0 and the last column block requires z_{in} = 0.

    Raises:
        ParameterMismatch: If m != k*b or n != c*k*b.
    """
    params.require_nd(matrix)
    n, k, b = matrix.num_cols, params.k, params.b
    w = b
    column_blocks = n // w
    table = code_table(n, [Z(i, s * w) for i in range(1, k * b + 1) for s in range(1, column_blocks + 1)])
    xs = tuple(X(j) for j in range(1, n + 1))
    blocks = []
    for r in range(k):
        rows = range(r * b + 1, (r + 1) * b + 1)
        for s in range(1, column_blocks + 1):
            left = tuple(Z(i, (s - 1) * w) for i in rows) if s > 1 else ()
            right = tuple(Z(i, s * w) for i in rows)
            chains = tuple(
                _chain(matrix, i, (s - 1) * w, s * w, final=(s == column_blocks)) for i in rows)
            blocks.append(ConstraintBlock(xs + left + right, chains, label=f"R'[{r + 1},{s}]"))
    provenance = Provenance("nd", k, b, params.c, params.seed)
    return AbstractInstance(table, tuple(blocks), (), provenance, matrix)


def encode_naive(matrix: F2Matrix, params: Optional[GeneratorParams] = None) -> CnfFormula:
    """Naive encoding; scopes have at most 3 variables."""
    formula = materialize(build_naive_instance(matrix, params))
    logger.info(f"naive encoding: {formula.num_vars} vars, {formula.num_clauses} clauses")
    return formula


def encode_blocked_pathwidth(matrix: F2Matrix, params: GeneratorParams, cap: int = None) -> CnfFormula:
    """Blocked encoding of modular pathwidth at most 2k - 1."""
    formula = materialize(build_blocked_instance(matrix, params), cap=cap)
    logger.info(f"blockpw encoding k={params.k} b={params.b}: "
                f"{formula.num_vars} vars, {formula.num_clauses} clauses")
    return formula


def encode_neighborhood_diversity(matrix: F2Matrix, params: GeneratorParams, cap: int = None) -> CnfFormula:
    """
    Neighborhood-diversity encoding.

    Raises:
        ScopeTooLarge: If n + 2b exceeds the materialization cap; the
            abstract instance is still available from build_nd_instance.
    """
    formula = materialize(build_nd_instance(matrix, params), cap=cap)
    logger.info(f"nd encoding k={params.k} b={params.b} c={params.c}: "
                f"{formula.num_vars} vars, {formula.num_clauses} clauses")
    return formula


BUILDERS = {
    "naive": build_naive_instance,
    "blockpw": build_blocked_instance,
    "nd": build_nd_instance,
}


def build_instance(mode: str, matrix: F2Matrix, params: GeneratorParams) -> AbstractInstance:
    """Abstract instance for a generator mode name."""
    return BUILDERS[mode](matrix, params)


def size_bound(params: GeneratorParams, n: int) -> int:
    """k*n constraints, at most 2^(2b+1) clauses of at most 2b+1 literals each."""
    width = 2 * params.b + 1
    return params.k * n * (1 << width) * width


def expected_nd(params: GeneratorParams) -> int:
    """
    Neighborhood diversity of the nd encoding's incidence graph.

    One class for X, and per row block and column block one clause class and
    one class of right-boundary accumulators. An accumulator class that
    touches every constraint merges with X; this only happens for k = 1 and
    c <= 2.
    """
    constraints = params.k * params.c * params.k
    merged = 1 if params.k == 1 and params.c <= 2 else 0
    return 1 + 2 * constraints - merged
