import logging
import os

import pytest

from codewidth import setup_logging
from codewidth.common.config_validator import validate_config
from codewidth.common.utils import (
    atomic_write_text,
    default_workers,
    parse_fraction,
    read_text,
    word_from_int,
    word_to_int,
)
from codewidth.core.exceptions import (
    BudgetExceeded,
    InvalidConfigError,
    LengthMismatch,
    ParseError,
    ScopeTooLarge,
    ValidationError,
)

# Mark all tests in this file as 'unit'
pytestmark = pytest.mark.unit


@pytest.fixture
def clean_env(monkeypatch):
    for name in list(os.environ):
        if name.startswith("CODEWIDTH_"):
            monkeypatch.delenv(name)
    return monkeypatch


# ============================================================================
# Configuration
# ============================================================================

def test_validate_config_accepts_defaults(clean_env):
    assert validate_config() == []


def test_validate_config_reports_malformed_values(clean_env):
    clean_env.setenv("CODEWIDTH_COMPILE_BUDGET", "many")
    clean_env.setenv("CODEWIDTH_CODEWORD_CAP", "-1")
    clean_env.setenv("CODEWIDTH_DEFAULT_BETA", "2/3")
    clean_env.setenv("CODEWIDTH_LOG_LEVEL", "chatty")
    assert set(validate_config()) == {
        "CODEWIDTH_COMPILE_BUDGET",
        "CODEWIDTH_CODEWORD_CAP",
        "CODEWIDTH_DEFAULT_BETA",
        "CODEWIDTH_LOG_LEVEL",
    }


@pytest.mark.parametrize("beta,valid", [("1/3", True), ("0.5", True), ("0", False), ("1/0", False), ("x", False)])
def test_validate_config_beta(clean_env, beta, valid):
    clean_env.setenv("CODEWIDTH_DEFAULT_BETA", beta)
    assert (validate_config() == []) == valid


def test_default_workers(mocker):
    mocker.patch('codewidth.common.utils.Config.EXPERIMENT_WORKERS', 3)
    assert default_workers() == 3
    mocker.patch('codewidth.common.utils.Config.EXPERIMENT_WORKERS', 0)
    mocker.patch('codewidth.common.utils.psutil.cpu_count', return_value=None)
    assert default_workers() == 1


def test_setup_logging_installs_one_handler():
    package_logger = logging.getLogger("codewidth")
    package_logger.handlers.clear()
    try:
        setup_logging("debug")
        setup_logging("info")
        assert len(package_logger.handlers) == 1
        assert package_logger.level == logging.INFO
    finally:
        package_logger.handlers.clear()


# ============================================================================
# Exceptions
# ============================================================================

def test_exit_statuses_and_categories():
    assert ValidationError("bad").exit_status == 2
    assert ParseError("bad", line_number=3).message == "line 3: bad"
    assert BudgetExceeded(10).exit_status == 3
    assert ScopeTooLarge(30, 20).hint == "use abstract-instance mode"
    error = InvalidConfigError(["CODEWIDTH_LOG_LEVEL"])
    assert error.exit_status == 4 and error.log_category == "CRITICAL"
    assert "CODEWIDTH_LOG_LEVEL" in error.user_message


def test_debug_info_is_collected():
    error = LengthMismatch(expected=4, actual=3)
    assert error.debug_info == {"expected": 4, "actual": 3, "field": "word"}
    assert error.error_code == "VAL001"


def test_log_levels_follow_category(caplog):
    test_logger = logging.getLogger("codewidth.tests")
    with caplog.at_level(logging.DEBUG, logger="codewidth.tests"):
        ValidationError("bad field", field="k").log(test_logger, command="generate")
        BudgetExceeded(5).log(test_logger, command="count")
    levels = [record.levelno for record in caplog.records]
    assert levels == [logging.WARNING, logging.ERROR]
    assert "[INPUT] [VAL000] ValidationError: bad field" in caplog.records[0].getMessage()
    assert "Command: count" in caplog.records[1].getMessage()


# ============================================================================
# Utilities
# ============================================================================

def test_atomic_write_text(tmp_path):
    target = tmp_path / "nested" / "out.txt"
    atomic_write_text(target, "first\n")
    atomic_write_text(target, "second\n")
    assert read_text(target) == "second\n"
    assert [p.name for p in target.parent.iterdir()] == ["out.txt"]


def test_atomic_write_leaves_target_on_failure(tmp_path, mocker):
    target = tmp_path / "out.txt"
    atomic_write_text(target, "kept\n")
    mocker.patch('codewidth.common.utils.os.replace', side_effect=OSError("disk full"))
    with pytest.raises(OSError):
        atomic_write_text(target, "lost\n")
    assert read_text(target) == "kept\n"
    assert [p.name for p in tmp_path.iterdir()] == ["out.txt"]


def test_small_helpers():
    assert word_from_int(0b110, 4) == (0, 1, 1, 0)
    assert word_to_int((0, 1, 1, 0)) == 0b110
    assert parse_fraction(" 1/3 ") == parse_fraction("2/6")
