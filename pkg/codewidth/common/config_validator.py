import os
from fractions import Fraction

INTEGER_VARS = [
    "CODEWIDTH_MATERIALIZATION_CAP",
    "CODEWIDTH_BRUTE_FORCE_VAR_CAP",
    "CODEWIDTH_CODEWORD_CAP",
    "CODEWIDTH_PATHWIDTH_VERTEX_CAP",
    "CODEWIDTH_TRUTH_TABLE_VAR_CAP",
    "CODEWIDTH_COVER_SEARCH_CAP",
    "CODEWIDTH_COMPILE_BUDGET",
    "CODEWIDTH_EXPERIMENT_WORKERS",
]

LOG_LEVELS = {"DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"}


def validate_config():
    """
    Validates the optional CODEWIDTH_* environment variables.
    Unset variables fall back to defaults; only present but malformed
    values are reported. Returns a list of invalid variable names.
    """
    invalid_vars = []

    for var in INTEGER_VARS:
        value = os.environ.get(var)
        if value is None:
            continue
        try:
            if int(value) < 0:
                invalid_vars.append(var)
        except ValueError:
            invalid_vars.append(var)

    beta = os.environ.get("CODEWIDTH_DEFAULT_BETA")
    if beta is not None:
        try:
            if not 0 < Fraction(beta) <= Fraction(1, 2):
                invalid_vars.append("CODEWIDTH_DEFAULT_BETA")
        except (ValueError, ZeroDivisionError):
            invalid_vars.append("CODEWIDTH_DEFAULT_BETA")

    level = os.environ.get("CODEWIDTH_LOG_LEVEL")
    if level is not None and level.upper() not in LOG_LEVELS:
        invalid_vars.append("CODEWIDTH_LOG_LEVEL")

    return invalid_vars
