"""
codewidth Exception Hierarchy.

Organized into:
- base.py: Base CodeWidthException class
- input_errors.py: malformed input and violated preconditions (exit 2)
- limit_errors.py: caps, budgets and configuration (exit 3 / 4)
"""

# Base exception
from .base import CodeWidthException

# Input errors
from .input_errors import (
    InputError,
    ValidationError,
    LengthMismatch,
    ParameterMismatch,
    IncompleteAssignment,
    ParseError,
    CircuitError,
    CyclicCircuit,
    MultipleSinks,
    NotDecomposable,
    NotDeterministic,
)

# Limit and configuration errors
from .limit_errors import (
    LimitError,
    CapExceeded,
    ScopeTooLarge,
    TooLarge,
    BudgetExceeded,
    ConfigurationError,
    InvalidConfigError,
)

__all__ = [
    # Base
    'CodeWidthException',

    # Input errors
    'InputError',
    'ValidationError',
    'LengthMismatch',
    'ParameterMismatch',
    'IncompleteAssignment',
    'ParseError',
    'CircuitError',
    'CyclicCircuit',
    'MultipleSinks',
    'NotDecomposable',
    'NotDeterministic',

    # Limit errors
    'LimitError',
    'CapExceeded',
    'ScopeTooLarge',
    'TooLarge',
    'BudgetExceeded',
    'ConfigurationError',
    'InvalidConfigError',
]
