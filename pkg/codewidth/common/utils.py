import os
import tempfile
import logging
from fractions import Fraction
from typing import Sequence, Tuple

import psutil

from config import Config

logger = logging.getLogger(__name__)

Word = Tuple[int, ...]


def word_from_int(value: int, length: int) -> Word:
    """Little-endian bit word: bit j of value becomes position j."""
    return tuple((value >> j) & 1 for j in range(length))


def word_to_int(word: Sequence[int]) -> int:
    """Inverse of word_from_int."""
    value = 0
    for j, bit in enumerate(word):
        if bit:
            value |= 1 << j
    return value


def parse_fraction(text) -> Fraction:
    """Parses '1/3', '0.5' or a Fraction into an exact fraction."""
    if isinstance(text, Fraction):
        return text
    return Fraction(str(text).strip())


def default_workers() -> int:
    """Worker count for parallel experiment cells."""
    if Config.EXPERIMENT_WORKERS > 0:
        return Config.EXPERIMENT_WORKERS
    return psutil.cpu_count(logical=False) or psutil.cpu_count() or 1


def atomic_write_text(path, text: str):
    """
    Writes text to path atomically: the content goes to a temporary file in
    the same directory which then replaces the target.
    """
    path = os.fspath(path)
    directory = os.path.dirname(os.path.abspath(path))
    os.makedirs(directory, exist_ok=True)
    fd, tmp_path = tempfile.mkstemp(dir=directory, prefix=".tmp-", suffix=".part")
    try:
        with os.fdopen(fd, "w", encoding="utf-8", newline="\n") as f:
            f.write(text)
        os.replace(tmp_path, path)
    except Exception:
        if os.path.exists(tmp_path):
            os.unlink(tmp_path)
        raise
    logger.debug(f"Wrote {len(text)} characters to {path}")


def read_text(path) -> str:
    """Reads a UTF-8 text artifact."""
    with open(path, encoding="utf-8") as f:
        return f.read()
