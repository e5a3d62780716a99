"""
Brute-force solution oracles for micro-scale formulas.

Assignments are enumerated in chunks as numpy bit arrays; assignment index
t gives DIMACS variable idx the value (t >> (idx - 1)) & 1.
"""

import logging
from typing import Iterator, Optional, Sequence, Set

import numpy as np

from config import Config
from codewidth.common.utils import Word
from codewidth.core.exceptions import CapExceeded
from .formula import CnfFormula
from .variables import Variable

logger = logging.getLogger(__name__)

CHUNK_BITS = 20


def _check_cap(formula: CnfFormula, cap: Optional[int]):
    cap = Config.BRUTE_FORCE_VAR_CAP if cap is None else cap
    if formula.num_vars > cap:
        raise CapExceeded(
            f"Brute force over {formula.num_vars} variables exceeds the cap of {cap}",
            limit=cap, requested=formula.num_vars)


def _satisfying_chunks(formula: CnfFormula) -> Iterator[np.ndarray]:
    """Yields, per chunk, the satisfying assignments as an (rows, num_vars) uint8 array."""
    num_vars = formula.num_vars
    total = 1 << num_vars
    chunk = 1 << CHUNK_BITS
    shifts = np.arange(num_vars, dtype=np.int64)
    for start in range(0, total, chunk):
        index = np.arange(start, min(start + chunk, total), dtype=np.int64)
        values = ((index[:, None] >> shifts[None, :]) & 1).astype(np.uint8)
        alive = np.ones(len(index), dtype=bool)
        for clause in formula.clauses:
            satisfied = np.zeros(len(index), dtype=bool)
            for lit in clause:
                column = values[:, abs(lit) - 1]
                satisfied |= (column == 1) if lit > 0 else (column == 0)
            alive &= satisfied
            if not alive.any():
                break
        if alive.any():
            yield values[alive]


def solution_projection(formula: CnfFormula, variables: Sequence[Variable] = None,
                        cap: int = None) -> Set[Word]:
    """
    {tau restricted to variables : tau satisfies formula}.

    Each projected assignment is a bit tuple in the order of `variables`;
    the default is x_1..x_n, which matches enumerate_codewords.

    Raises:
        CapExceeded: If the formula has more variables than the cap.
    """
    _check_cap(formula, cap)
    if variables is None:
        variables = formula.variables.x_variables()
    columns = [formula.variables.index(var) - 1 for var in variables]
    projected = set()
    for models in _satisfying_chunks(formula):
        if not columns:
            projected.add(())
            break
        unique = np.unique(models[:, columns], axis=0)
        projected.update(tuple(int(bit) for bit in row) for row in unique)
    logger.debug(f"Projection onto {len(columns)} variables has {len(projected)} assignments")
    return projected


def brute_force_count(formula: CnfFormula, cap: int = None) -> int:
    """Number of satisfying assignments over all formula variables."""
    _check_cap(formula, cap)
    return sum(len(models) for models in _satisfying_chunks(formula))


def iter_models(formula: CnfFormula, cap: int = None) -> Iterator[Word]:
    """Satisfying assignments as bit tuples indexed by DIMACS index - 1."""
    _check_cap(formula, cap)
    for models in _satisfying_chunks(formula):
        for row in models:
            yield tuple(int(bit) for bit in row)
