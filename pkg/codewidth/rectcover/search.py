"""
Exhaustive minimum multi-partition rectangle cover for functions of at most
eight variables.

Per balanced partition, the maximal rectangles inside the 1-set are R x C
with C an intersection of row patterns and R every row containing C. The
union over partitions, minus duplicates and dominated candidates, is then
searched for an exact minimum set cover by iterative deepening.
"""

import logging
from fractions import Fraction
from typing import List, Optional, Set

from config import Config
from codewidth.common.truthtable import TruthTable
from codewidth.common.utils import parse_fraction
from codewidth.core.exceptions import CapExceeded, ValidationError
from .rectangles import Partition, balanced_partitions, matrix_rows

logger = logging.getLogger(__name__)

MAX_COVER_VARS = 8


def _maximal_rectangles(f: TruthTable, partition: Partition) -> Set[int]:
    """Maximal 1-rectangles of f over the partition, as masks over f's truth-table indices."""
    rows = matrix_rows(f, partition)
    closed = set(rows.values())
    frontier = list(closed)
    while frontier:
        pattern = frontier.pop()
        for other in list(rows.values()):
            meet = pattern & other
            if meet and meet not in closed:
                closed.add(meet)
                frontier.append(meet)

    first_pos = [f.variables.index(v) for v in partition.first]
    second_pos = [f.variables.index(v) for v in partition.second]

    def global_index(row: int, col: int) -> int:
        index = 0
        for q, p in enumerate(first_pos):
            if (row >> q) & 1:
                index |= 1 << p
        for q, p in enumerate(second_pos):
            if (col >> q) & 1:
                index |= 1 << p
        return index

    masks = set()
    for columns in closed:
        members = [row for row, pattern in rows.items() if pattern & columns == columns]
        mask = 0
        for row in members:
            col = 0
            remaining = columns
            while remaining:
                if remaining & 1:
                    mask |= 1 << global_index(row, col)
                remaining >>= 1
                col += 1
        masks.add(mask)
    return masks


def _undominated(candidates: Set[int]) -> List[int]:
    ordered = sorted(candidates, key=lambda m: (-m.bit_count(), m))
    kept: List[int] = []
    for mask in ordered:
        if not any(mask & other == mask for other in kept):
            kept.append(mask)
    return kept


def min_cover_bruteforce(f: TruthTable, beta: Fraction = None, cap: int = None) -> int:
    """
    Minimum number of rectangles over beta-balanced partitions whose
    disjunction is f; 0 for the constant-0 function.

    Raises:
        CapExceeded: If f has more than eight variables or the search visits
            more than `cap` nodes.
        ValidationError: If no beta-balanced partition exists.
    """
    beta = parse_fraction(Config.DEFAULT_BETA if beta is None else beta)
    cap = Config.COVER_SEARCH_CAP if cap is None else cap
    if f.num_vars > MAX_COVER_VARS:
        raise CapExceeded(f"Minimum cover search supports at most {MAX_COVER_VARS} variables, "
                          f"got {f.num_vars}", limit=MAX_COVER_VARS, requested=f.num_vars)
    if f.bits == 0:
        return 0

    candidates: Set[int] = set()
    partitions = 0
    for partition in balanced_partitions(f.variables, beta):
        partitions += 1
        candidates |= _maximal_rectangles(f, partition)
    rectangles = _undominated(candidates)
    logger.info(f"Cover search: {partitions} partitions, {len(rectangles)} maximal rectangles")
    if not rectangles:
        # no balanced partition exists, so no cover does
        raise ValidationError(f"No {beta}-balanced partition of {f.num_vars} variables", field="beta")

    containing = {}
    visited = [0]

    def cover(remaining: int, budget: int) -> bool:
        visited[0] += 1
        if visited[0] > cap:
            raise CapExceeded(f"Cover search exceeded {cap} nodes", limit=cap, requested=visited[0])
        if not remaining:
            return True
        if budget == 0:
            return False
        point = (remaining & -remaining).bit_length() - 1
        options = containing.get(point)
        if options is None:
            options = [mask for mask in rectangles if (mask >> point) & 1]
            containing[point] = options
        return any(cover(remaining & ~mask, budget - 1) for mask in options)

    size: Optional[int] = None
    for budget in range(1, len(rectangles) + 1):
        if cover(f.bits, budget):
            size = budget
            break
    logger.info(f"Minimum cover size {size} after {visited[0]} search nodes")
    return size
