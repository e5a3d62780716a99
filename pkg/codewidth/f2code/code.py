"""
Linear codes C = {x : Ax = 0} and the linear-algebra model counter.
"""

from dataclasses import dataclass
from functools import cached_property
from typing import List, Sequence, Set

from config import Config
from codewidth.common.truthtable import TruthTable
from codewidth.common.utils import Word, word_from_int
from codewidth.core.exceptions import CapExceeded, LengthMismatch
from .matrix import F2Matrix, rank, reduced_row_echelon


@dataclass(frozen=True)
class LinearCode:
    """The code defined by a parity-check matrix."""

    check_matrix: F2Matrix

    @property
    def length(self) -> int:
        return self.check_matrix.num_cols

    @cached_property
    def rank(self) -> int:
        return rank(self.check_matrix)

    @property
    def dimension(self) -> int:
        return self.length - self.rank


def nullspace_basis(code: LinearCode) -> List[int]:
    """Basis of the nullspace as word bitsets, one vector per free column."""
    rows, pivots = reduced_row_echelon(code.check_matrix)
    pivot_set = set(pivots)
    basis = []
    for free in range(code.length):
        if free in pivot_set:
            continue
        vector = 1 << free
        for row, pivot in zip(rows, pivots):
            if (row >> free) & 1:
                vector |= 1 << pivot
        basis.append(vector)
    return basis


def enumerate_codewords(code: LinearCode, cap: int = None) -> Set[Word]:
    """
    All codewords as bit tuples (x_1, ..., x_n).

    Raises:
        CapExceeded: If the code has more than `cap` words; count it with
            affine_model_count instead.
    """
    cap = Config.CODEWORD_CAP if cap is None else cap
    size = affine_model_count(code)
    if size > cap:
        raise CapExceeded(
            f"Code has {size} words, cap is {cap}",
            limit=cap, requested=size,
            user_message="Code too large to enumerate; use affine_model_count.")
    basis = nullspace_basis(code)
    words = set()
    for combo in range(1 << len(basis)):
        vector = 0
        for t, base in enumerate(basis):
            if (combo >> t) & 1:
                vector ^= base
        words.add(word_from_int(vector, code.length))
    return words


def is_codeword(code: LinearCode, word: Sequence[int]) -> bool:
    """True iff A . word = 0 over GF(2)."""
    if len(word) != code.length:
        raise LengthMismatch(code.length, len(word))
    value = 0
    for j, bit in enumerate(word):
        if bit:
            value |= 1 << j
    return all((row & value).bit_count() % 2 == 0 for row in code.check_matrix.rows)


def affine_model_count(code: LinearCode) -> int:
    """Number of codewords, 2^(n - rank)."""
    return 1 << (code.length - code.rank)


def code_truth_table(code: LinearCode, names: Sequence[str] = None) -> TruthTable:
    """Characteristic function f_C over variables x1..xn (or the given names)."""
    if names is None:
        names = [f"x{j}" for j in range(1, code.length + 1)]
    bits = 0
    for index in range(1 << code.length):
        if all((row & index).bit_count() % 2 == 0 for row in code.check_matrix.rows):
            bits |= 1 << index
    return TruthTable(tuple(names), bits)
