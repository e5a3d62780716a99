"""
codewidth: hard CNF encodings of GF(2) codes and a small knowledge-compilation toolkit.
"""

import logging

from config import Config

__version__ = "0.1.0"


def setup_logging(level=None):
    """
    Installs a single stream handler on the package logger.

    Args:
        level: Log level name; defaults to Config.LOG_LEVEL.
    """
    logger = logging.getLogger("codewidth")
    logger.setLevel((level or Config.LOG_LEVEL).upper())

    # Ensure a handler exists to output to stderr if none exists
    if not logger.handlers:
        handler = logging.StreamHandler()
        handler.setFormatter(logging.Formatter(
            '%(asctime)s - %(name)s - %(levelname)s - %(message)s'))
        logger.addHandler(handler)
    return logger
