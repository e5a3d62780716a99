"""
Parity-check matrices over GF(2) stored as row bitsets.

Row i is an int whose bit j is the entry a_{i+1, j+1}, so bit j of a row
lines up with variable x_{j+1} everywhere in the package.
"""

import logging
from dataclasses import dataclass
from typing import Iterable, List, Sequence, Tuple

import numpy as np

from codewidth.core.exceptions import ParseError, ValidationError

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class F2Matrix:
    """An m x n bit matrix; m = 0 is the trivial code of all words."""

    num_rows: int
    num_cols: int
    rows: Tuple[int, ...]

    def __post_init__(self):
        if self.num_cols < 1:
            raise ValidationError("Matrix needs at least one column", field="num_cols")
        if len(self.rows) != self.num_rows:
            raise ValidationError(
                f"Expected {self.num_rows} rows, got {len(self.rows)}", field="rows")
        limit = 1 << self.num_cols
        for row in self.rows:
            if row < 0 or row >= limit:
                raise ValidationError("Row has bits beyond the last column", field="rows")

    @classmethod
    def from_lists(cls, entries: Sequence[Sequence[int]], num_cols: int = None) -> "F2Matrix":
        """Builds a matrix from nested 0/1 lists, e.g. [[1, 1, 0], [0, 1, 1]]."""
        if num_cols is None:
            if not entries:
                raise ValidationError("num_cols is required for a matrix without rows",
                                      field="num_cols")
            num_cols = len(entries[0])
        rows = []
        for row in entries:
            if len(row) != num_cols:
                raise ValidationError("Ragged matrix rows", field="entries")
            value = 0
            for j, bit in enumerate(row):
                if bit not in (0, 1):
                    raise ValidationError(f"Entry {bit!r} is not a bit", field="entries")
                if bit:
                    value |= 1 << j
            rows.append(value)
        return cls(len(rows), num_cols, tuple(rows))

    @classmethod
    def from_array(cls, array: np.ndarray) -> "F2Matrix":
        """Builds a matrix from a 2-d numpy array of 0/1 values."""
        m, n = array.shape
        return cls.from_lists([[int(v) for v in row] for row in array], num_cols=n)

    def entry(self, i: int, j: int) -> int:
        """a_{ij} with 1-based indices, as written in the encodings."""
        return (self.rows[i - 1] >> (j - 1)) & 1

    def row_bits(self, i: int) -> Tuple[int, ...]:
        """Row i (1-based) as a bit tuple."""
        return tuple(self.entry(i, j) for j in range(1, self.num_cols + 1))

    def to_lists(self) -> List[List[int]]:
        return [list(self.row_bits(i)) for i in range(1, self.num_rows + 1)]

    def to_array(self) -> np.ndarray:
        return np.array(self.to_lists(), dtype=np.uint8).reshape(self.num_rows, self.num_cols)

    def with_rows(self, extra_rows: Iterable[int]) -> "F2Matrix":
        """Matrix with additional row bitsets appended."""
        rows = self.rows + tuple(extra_rows)
        return F2Matrix(len(rows), self.num_cols, rows)


def rank(matrix: F2Matrix) -> int:
    """Dimension of the row space over GF(2) via Gaussian elimination on bitsets."""
    work = list(matrix.rows)
    rank_value = 0
    row_idx = 0
    for col in range(matrix.num_cols):
        pivot = None
        for r in range(row_idx, len(work)):
            if (work[r] >> col) & 1:
                pivot = r
                break
        if pivot is None:
            continue
        work[row_idx], work[pivot] = work[pivot], work[row_idx]
        for r in range(len(work)):
            if r != row_idx and ((work[r] >> col) & 1):
                work[r] ^= work[row_idx]
        rank_value += 1
        row_idx += 1
        if row_idx == len(work):
            break
    return rank_value


def reduced_row_echelon(matrix: F2Matrix) -> Tuple[List[int], List[int]]:
    """
    Reduced row echelon form.

    Returns:
        (rows, pivot_columns): the nonzero reduced rows and, for each, its
        pivot column (0-based).
    """
    work = list(matrix.rows)
    pivots = []
    row_idx = 0
    for col in range(matrix.num_cols):
        pivot = next((r for r in range(row_idx, len(work)) if (work[r] >> col) & 1), None)
        if pivot is None:
            continue
        work[row_idx], work[pivot] = work[pivot], work[row_idx]
        for r in range(len(work)):
            if r != row_idx and ((work[r] >> col) & 1):
                work[r] ^= work[row_idx]
        pivots.append(col)
        row_idx += 1
        if row_idx == len(work):
            break
    return work[:row_idx], pivots


def sample_parity_check(m: int, n: int, seed: int) -> F2Matrix:
    """
    Uniformly random m x n bit matrix drawn from numpy's PCG64 generator.

    The same (m, n, seed) gives the same matrix on every platform: PCG64 and
    Generator.integers over uint8 are fixed by numpy's stream-compatibility
    policy.
    """
    if m < 0 or n < 1:
        raise ValidationError(f"Invalid matrix shape {m}x{n}", field="shape")
    rng = np.random.Generator(np.random.PCG64(seed))
    array = rng.integers(0, 2, size=(m, n), dtype=np.uint8)
    logger.debug(f"Sampled {m}x{n} parity-check matrix with seed {seed}")
    return F2Matrix.from_array(array.reshape(m, n))


def write_matrix(matrix: F2Matrix) -> str:
    """Text format: 'm n' then m lines of n characters in {0,1}."""
    lines = [f"{matrix.num_rows} {matrix.num_cols}"]
    for i in range(1, matrix.num_rows + 1):
        lines.append("".join(str(b) for b in matrix.row_bits(i)))
    return "\n".join(lines) + "\n"


def parse_matrix(text: str) -> F2Matrix:
    """Inverse of write_matrix."""
    lines = text.splitlines()
    if not lines:
        raise ParseError("empty matrix file", line_number=1)
    header = lines[0].split()
    if len(header) != 2 or not all(tok.isdigit() for tok in header):
        raise ParseError(f"expected 'm n' header, got {lines[0]!r}", line_number=1)
    m, n = int(header[0]), int(header[1])
    body = lines[1:]
    while body and not body[-1].strip():
        body.pop()
    if len(body) != m:
        raise ParseError(f"expected {m} rows, found {len(body)}", line_number=len(lines))
    entries = []
    for offset, line in enumerate(body, start=2):
        line = line.strip()
        if len(line) != n or set(line) - {"0", "1"}:
            raise ParseError(f"row must be {n} characters in {{0,1}}", line_number=offset)
        entries.append([int(ch) for ch in line])
    return F2Matrix.from_lists(entries, num_cols=n)
