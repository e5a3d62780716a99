"""Exhaustive-DPLL compilation to decision-DNNF and the scaling-experiment driver."""

from .dpll import HEURISTICS, CompileStats, compile_dpll
from .experiment import (
    COLUMNS,
    Cell,
    ExperimentGrid,
    Report,
    Row,
    load_grid,
    parse_grid,
    run_cell,
    scaling_experiment,
)

__all__ = [
    'HEURISTICS',
    'CompileStats',
    'compile_dpll',
    'COLUMNS',
    'Cell',
    'ExperimentGrid',
    'Report',
    'Row',
    'load_grid',
    'parse_grid',
    'run_cell',
    'scaling_experiment',
]
