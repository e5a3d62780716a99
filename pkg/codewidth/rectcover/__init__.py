"""Balanced partitions, combinatorial rectangles, cover verification and minimum-cover search."""

from .rectangles import (
    Partition,
    Rectangle,
    RectangleCover,
    CoverReport,
    balanced_partitions,
    matrix_rows,
    is_rectangle,
    verify_cover,
)
from .search import MAX_COVER_VARS, min_cover_bruteforce
from .formats import write_cover, parse_cover

__all__ = [
    'Partition',
    'Rectangle',
    'RectangleCover',
    'CoverReport',
    'balanced_partitions',
    'matrix_rows',
    'is_rectangle',
    'verify_cover',
    'MAX_COVER_VARS',
    'min_cover_bruteforce',
    'write_cover',
    'parse_cover',
]
