"""NNF circuits: the text format, structural checks, evaluation, forgetting and model counting."""

from .circuit import AND, LITERAL, OR, CircuitBuilder, NnfCircuit, NnfNode, parse_nnf, write_nnf
from .checks import (
    certify_deterministic,
    check_decomposable,
    check_deterministic,
    circuit_truth_table,
    evaluate,
    node_tables,
)
from .operations import count_models, forget, require_deterministic

__all__ = [
    'AND',
    'LITERAL',
    'OR',
    'CircuitBuilder',
    'NnfCircuit',
    'NnfNode',
    'parse_nnf',
    'write_nnf',
    'certify_deterministic',
    'check_decomposable',
    'check_deterministic',
    'circuit_truth_table',
    'evaluate',
    'node_tables',
    'count_models',
    'forget',
    'require_deterministic',
]
