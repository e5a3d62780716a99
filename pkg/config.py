import os


def _int_env(name: str, default: int) -> int:
    # malformed values are reported by validate_config, not here
    try:
        return int(os.environ.get(name, default))
    except ValueError:
        return default


class Config:
    """Toolkit settings loaded from environment variables."""

    # Largest constraint scope expanded into canonical clauses; the nd
    # encoding grows as 2^(n + 2b), so large instances stay abstract
    MATERIALIZATION_CAP = _int_env('CODEWIDTH_MATERIALIZATION_CAP', 20)

    # Brute-force oracles
    BRUTE_FORCE_VAR_CAP = _int_env('CODEWIDTH_BRUTE_FORCE_VAR_CAP', 24)
    CODEWORD_CAP = _int_env('CODEWIDTH_CODEWORD_CAP', 4096)
    PATHWIDTH_VERTEX_CAP = _int_env('CODEWIDTH_PATHWIDTH_VERTEX_CAP', 20)
    TRUTH_TABLE_VAR_CAP = _int_env('CODEWIDTH_TRUTH_TABLE_VAR_CAP', 20)
    COVER_SEARCH_CAP = _int_env('CODEWIDTH_COVER_SEARCH_CAP', 200000)

    # Compiler
    COMPILE_BUDGET = _int_env('CODEWIDTH_COMPILE_BUDGET', 200000)

    # Rectangle covers
    DEFAULT_BETA = os.environ.get('CODEWIDTH_DEFAULT_BETA', '1/3')

    # Experiments: 0 means one worker per physical core
    EXPERIMENT_WORKERS = _int_env('CODEWIDTH_EXPERIMENT_WORKERS', 0)
    REPORT_SCHEMA_VERSION = 1

    LOG_LEVEL = os.environ.get('CODEWIDTH_LOG_LEVEL', 'WARNING').upper()
