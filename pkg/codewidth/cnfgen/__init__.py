"""CNF encodings of code membership, the DIMACS data model and brute-force oracles."""

from .variables import Variable, VariableTable, X, Z, V, code_table, parse_variable
from .formula import GENERATORS, Clause, CnfFormula, GeneratorParams, Provenance, formula_size
from .constraints import (
    AbstractInstance,
    ConstraintBlock,
    ParityChain,
    constraint_to_clauses,
    materialize,
    parse_abstract,
    write_abstract,
)
from .encoders import (
    build_blocked_instance,
    build_instance,
    build_naive_instance,
    build_nd_instance,
    encode_blocked_pathwidth,
    encode_naive,
    encode_neighborhood_diversity,
    expected_nd,
    size_bound,
)
from .dimacs import parse_dimacs, write_dimacs
from .oracle import brute_force_count, iter_models, solution_projection

__all__ = [
    'Variable',
    'VariableTable',
    'X',
    'Z',
    'V',
    'code_table',
    'parse_variable',
    'GENERATORS',
    'Clause',
    'CnfFormula',
    'GeneratorParams',
    'Provenance',
    'formula_size',
    'AbstractInstance',
    'ConstraintBlock',
    'ParityChain',
    'constraint_to_clauses',
    'materialize',
    'parse_abstract',
    'write_abstract',
    'build_blocked_instance',
    'build_instance',
    'build_naive_instance',
    'build_nd_instance',
    'encode_blocked_pathwidth',
    'encode_naive',
    'encode_neighborhood_diversity',
    'expected_nd',
    'size_bound',
    'parse_dimacs',
    'write_dimacs',
    'brute_force_count',
    'iter_models',
    'solution_projection',
]
