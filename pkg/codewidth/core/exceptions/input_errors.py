"""
Input exceptions (exit status 2).

These represent malformed files, inconsistent parameters and objects that
violate the preconditions of an operation.
"""

from typing import Optional
from .base import CodeWidthException


# ============================================================================
# INPUT ERRORS - Bad Files / Parameters / Objects
# ============================================================================

class InputError(CodeWidthException):
    """Base class for all input errors."""

    def __init__(self, message: str, **kwargs):
        kwargs.setdefault('log_category', 'INPUT')
        kwargs.setdefault('exit_status', 2)
        super().__init__(message, **kwargs)


# ============================================================================
# Validation Errors
# ============================================================================

class ValidationError(InputError):
    """Base validation error."""

    def __init__(self, message: str, field: Optional[str] = None, **kwargs):
        kwargs.setdefault('error_code', 'VAL000')
        kwargs.setdefault(
            'user_message',
            'Please check your input and try again.')
        if field:
            kwargs['debug_info'] = kwargs.get('debug_info', {})
            kwargs['debug_info']['field'] = field
        super().__init__(message, **kwargs)


class LengthMismatch(ValidationError):
    """A word does not have the code length n."""

    def __init__(self, expected: int, actual: int, **kwargs):
        kwargs.setdefault('error_code', 'VAL001')
        kwargs.setdefault(
            'user_message',
            f'Word has length {actual}, the code has length {expected}.')
        kwargs['debug_info'] = kwargs.get('debug_info', {})
        kwargs['debug_info'].update({'expected': expected, 'actual': actual})
        super().__init__(
            f"Word length {actual} does not match code length {expected}",
            field='word', **kwargs)


class ParameterMismatch(ValidationError):
    """Generator parameters are inconsistent with the matrix or the mode."""

    def __init__(self, message: str, **kwargs):
        kwargs.setdefault('error_code', 'VAL002')
        kwargs.setdefault('user_message', message)
        super().__init__(message, field='params', **kwargs)


class IncompleteAssignment(ValidationError):
    """An assignment does not cover every variable of the circuit."""

    def __init__(self, missing, **kwargs):
        missing = sorted(missing)
        kwargs.setdefault('error_code', 'VAL003')
        kwargs.setdefault(
            'user_message',
            f'Assignment is missing variables {missing[:10]}.')
        kwargs['debug_info'] = kwargs.get('debug_info', {})
        kwargs['debug_info']['missing'] = missing
        super().__init__(
            f"Assignment misses {len(missing)} circuit variables",
            field='assignment', **kwargs)


# ============================================================================
# Parse Errors
# ============================================================================

class ParseError(InputError):
    """A text artifact could not be parsed."""

    def __init__(self, message: str, line_number: Optional[int] = None, **kwargs):
        kwargs.setdefault('error_code', 'PRS001')
        location = f"line {line_number}: " if line_number is not None else ""
        kwargs.setdefault('user_message', f'Parse error: {location}{message}')
        kwargs['debug_info'] = kwargs.get('debug_info', {})
        kwargs['debug_info']['line_number'] = line_number
        super().__init__(f"{location}{message}", **kwargs)
        self.line_number = line_number


# ============================================================================
# Circuit Errors
# ============================================================================

class CircuitError(InputError):
    """Base class for circuits violating a structural requirement."""

    def __init__(self, message: str, **kwargs):
        kwargs.setdefault('error_code', 'NNF000')
        super().__init__(message, **kwargs)


class CyclicCircuit(CircuitError):
    """A node refers to itself or to a descendant."""

    def __init__(self, node: int, **kwargs):
        kwargs.setdefault('error_code', 'NNF001')
        kwargs['debug_info'] = kwargs.get('debug_info', {})
        kwargs['debug_info']['node'] = node
        super().__init__(f"Node {node} lies on a cycle", **kwargs)


class MultipleSinks(CircuitError):
    """More than one node has no parent."""

    def __init__(self, sinks, **kwargs):
        sinks = list(sinks)
        kwargs.setdefault('error_code', 'NNF002')
        kwargs['debug_info'] = kwargs.get('debug_info', {})
        kwargs['debug_info']['sinks'] = sinks[:20]
        super().__init__(f"Circuit has {len(sinks)} sinks, expected exactly one", **kwargs)


class NotDecomposable(CircuitError):
    """An AND node has children sharing variables."""

    def __init__(self, nodes, **kwargs):
        nodes = list(nodes)
        kwargs.setdefault('error_code', 'NNF003')
        kwargs['debug_info'] = kwargs.get('debug_info', {})
        kwargs['debug_info']['and_nodes'] = nodes[:20]
        super().__init__(f"{len(nodes)} AND nodes violate decomposability", **kwargs)


class NotDeterministic(CircuitError):
    """An OR node has children sharing a model, or determinism cannot be certified."""

    def __init__(self, nodes, **kwargs):
        nodes = list(nodes)
        kwargs.setdefault('error_code', 'NNF004')
        kwargs['debug_info'] = kwargs.get('debug_info', {})
        kwargs['debug_info']['or_nodes'] = nodes[:20]
        super().__init__(f"{len(nodes)} OR nodes are not (certifiably) deterministic", **kwargs)
