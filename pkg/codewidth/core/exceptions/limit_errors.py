"""
Limit exceptions (exit status 3) and configuration errors.

These represent operations refused because a brute-force or materialization
limit would be exceeded, and invalid settings.
"""

from typing import Optional
from .base import CodeWidthException


# ============================================================================
# LIMIT ERRORS - Caps / Budgets
# ============================================================================

class LimitError(CodeWidthException):
    """Base class for all limit errors."""

    def __init__(self, message: str, limit: Optional[int] = None,
                 requested: Optional[int] = None, **kwargs):
        kwargs.setdefault('log_category', 'LIMIT')
        kwargs.setdefault('exit_status', 3)
        kwargs['debug_info'] = kwargs.get('debug_info', {})
        kwargs['debug_info'].update({'limit': limit, 'requested': requested})
        super().__init__(message, **kwargs)
        self.limit = limit
        self.requested = requested


class CapExceeded(LimitError):
    """An enumeration would produce more objects than the cap allows."""

    def __init__(self, message: str, **kwargs):
        kwargs.setdefault('error_code', 'LIM001')
        super().__init__(message, **kwargs)


class ScopeTooLarge(LimitError):
    """A constraint scope is too large to expand into canonical clauses."""

    def __init__(self, scope_size: int, cap: int, **kwargs):
        kwargs.setdefault('error_code', 'LIM002')
        kwargs.setdefault(
            'user_message',
            f'A constraint has {scope_size} variables but the materialization cap is {cap}. '
            f'Write the abstract instance instead (generate --abstract PATH).')
        super().__init__(
            f"Constraint scope {scope_size} exceeds materialization cap {cap}",
            limit=cap, requested=scope_size, **kwargs)
        self.hint = "use abstract-instance mode"


class TooLarge(LimitError):
    """An exact brute-force computation refused an oversized input."""

    def __init__(self, message: str, **kwargs):
        kwargs.setdefault('error_code', 'LIM003')
        super().__init__(message, **kwargs)


class BudgetExceeded(LimitError):
    """The DPLL compiler created more nodes than its budget."""

    def __init__(self, budget: int, **kwargs):
        kwargs.setdefault('error_code', 'LIM004')
        kwargs.setdefault(
            'user_message',
            f'Compilation aborted after {budget} circuit nodes. Raise --budget or shrink the instance.')
        super().__init__(
            f"Compilation exceeded budget of {budget} nodes",
            limit=budget, **kwargs)


# ============================================================================
# Configuration Errors
# ============================================================================

class ConfigurationError(CodeWidthException):
    """Base configuration error."""

    def __init__(self, message: str, **kwargs):
        kwargs.setdefault('error_code', 'CFG000')
        kwargs.setdefault('log_category', 'CRITICAL')
        kwargs.setdefault('exit_status', 4)
        super().__init__(message, **kwargs)


class InvalidConfigError(ConfigurationError):
    """One or more environment settings are malformed."""

    def __init__(self, invalid_vars, **kwargs):
        invalid_vars = list(invalid_vars)
        kwargs.setdefault('error_code', 'CFG010')
        kwargs.setdefault(
            'user_message',
            f'Invalid configuration values: {", ".join(invalid_vars)}')
        kwargs['debug_info'] = kwargs.get('debug_info', {})
        kwargs['debug_info']['invalid_vars'] = invalid_vars
        super().__init__("Invalid configuration", **kwargs)
