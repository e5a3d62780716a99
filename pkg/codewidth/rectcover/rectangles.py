"""
Balanced partitions, combinatorial rectangles and multi-partition covers.

A rectangle over a partition (X1, X2) is r1 AND r2 with r1 a function of
X1 and r2 a function of X2. Viewing f as a matrix with rows indexed by
assignments to X1 and columns by assignments to X2, f is a rectangle iff
all nonzero rows are equal.
"""

import itertools
import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Hashable, Iterator, Optional, Sequence, Tuple

from codewidth.common.truthtable import TruthTable
from codewidth.core.exceptions import ValidationError

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Partition:
    first: Tuple[Hashable, ...]
    second: Tuple[Hashable, ...]

    def __post_init__(self):
        if set(self.first) & set(self.second):
            raise ValidationError("Partition sides overlap", field="partition")

    @property
    def variables(self) -> frozenset:
        return frozenset(self.first) | frozenset(self.second)

    def is_balanced(self, beta: Fraction) -> bool:
        """min(|X1|, |X2|) >= beta * |X|, evaluated exactly."""
        total = len(self.first) + len(self.second)
        return min(len(self.first), len(self.second)) >= Fraction(beta) * total

    def describe(self) -> str:
        return f"{{{', '.join(map(str, self.first))}}} | {{{', '.join(map(str, self.second))}}}"


def balanced_partitions(variables: Sequence[Hashable], beta: Fraction) -> Iterator[Partition]:
    """Unordered balanced partitions; the first variable always sits on the first side."""
    variables = tuple(variables)
    if not variables:
        return
    head, rest = variables[0], variables[1:]
    for size in range(len(rest) + 1):
        for others in itertools.combinations(rest, size):
            first = (head,) + others
            second = tuple(v for v in rest if v not in others)
            partition = Partition(first, second)
            if partition.is_balanced(beta):
                yield partition


def matrix_rows(f: TruthTable, partition: Partition) -> Dict[int, int]:
    """
    f as a matrix: X1-assignment index -> bitmask of X2-assignment indices
    where f is 1 (indices in the side's own variable order).
    """
    if partition.variables != frozenset(f.variables):
        raise ValidationError("Partition does not split the function's variables", field="partition")
    first_pos = [f.variables.index(v) for v in partition.first]
    second_pos = [f.variables.index(v) for v in partition.second]
    rows: Dict[int, int] = {}
    for index in range(1 << f.num_vars):
        if not (f.bits >> index) & 1:
            continue
        row = sum(1 << q for q, p in enumerate(first_pos) if (index >> p) & 1)
        col = sum(1 << q for q, p in enumerate(second_pos) if (index >> p) & 1)
        rows[row] = rows.get(row, 0) | (1 << col)
    return rows


def is_rectangle(f: TruthTable, partition: Partition) -> bool:
    """True iff the 1-set of f is a product of a row set and a column set."""
    patterns = set(matrix_rows(f, partition).values())
    return len(patterns) <= 1


@dataclass(frozen=True)
class Rectangle:
    """r1 over partition.first AND r2 over partition.second."""

    partition: Partition
    first: TruthTable
    second: TruthTable

    def function(self, variables: Sequence[Hashable]) -> TruthTable:
        """The rectangle as a truth table over `variables`."""
        return TruthTable.from_function(
            variables,
            lambda a: self.first.value(a) and self.second.value(a))

    @classmethod
    def from_function(cls, f: TruthTable, partition: Partition) -> "Rectangle":
        """
        Factors a rectangle function into its two sides.

        Raises:
            ValidationError: If f is not a rectangle over the partition.
        """
        rows = matrix_rows(f, partition)
        patterns = set(rows.values())
        if len(patterns) > 1:
            raise ValidationError(f"Function is not a rectangle over {partition.describe()}",
                                  field="function")
        row_bits = sum(1 << row for row in rows)
        col_bits = patterns.pop() if patterns else 0
        return cls(partition, TruthTable(partition.first, row_bits), TruthTable(partition.second, col_bits))


@dataclass(frozen=True)
class RectangleCover:
    rectangles: Tuple[Rectangle, ...]

    def __len__(self):
        return len(self.rectangles)


@dataclass(frozen=True)
class CoverReport:
    ok: bool
    violation: Optional[str] = None
    witness: object = None

    def describe(self) -> str:
        return "ok" if self.ok else f"{self.violation}: {self.witness}"


def verify_cover(f: TruthTable, cover: RectangleCover, beta: Fraction) -> CoverReport:
    """
    Checks every partition is balanced and splits f's variables, every
    member's sides match its partition, and the disjunction equals f.
    """
    union = 0
    for position, rectangle in enumerate(cover.rectangles):
        partition = rectangle.partition
        if partition.variables != frozenset(f.variables):
            return CoverReport(False, "partition does not split the variables", position)
        if not partition.is_balanced(beta):
            return CoverReport(False, "unbalanced partition", (position, partition.describe()))
        if (set(rectangle.first.variables) != set(partition.first)
                or set(rectangle.second.variables) != set(partition.second)):
            return CoverReport(False, "side mismatch", position)
        union |= rectangle.function(f.variables).bits

    uncovered = f.bits & ~union
    if uncovered:
        index = (uncovered & -uncovered).bit_length() - 1
        return CoverReport(False, "uncovered point", _point(f, index))
    extra = union & ~f.bits
    if extra:
        index = (extra & -extra).bit_length() - 1
        return CoverReport(False, "covered zero", _point(f, index))
    return CoverReport(True)


def _point(f: TruthTable, index: int) -> Dict[Hashable, int]:
    return {v: (index >> p) & 1 for p, v in enumerate(f.variables)}
