"""
Base exception class for the codewidth toolkit.
"""

import logging
from typing import Optional, Dict, Any


class CodeWidthException(Exception):
    """
    Base exception for all codewidth errors.

    Attributes:
        error_code: Unique identifier for tracking (e.g., "VAL001", "PRS001", "LIM002")
        user_message: Clear, actionable message for the command-line user
        debug_info: Dictionary with the offending values
        exit_status: Process exit status used by the CLI (2 input, 3 limit, 4 config)
        log_category: "INPUT", "LIMIT" or "CRITICAL"
    """

    def __init__(
        self,
        message: str,
        error_code: str = "UNKNOWN",
        user_message: Optional[str] = None,
        debug_info: Optional[Dict[str, Any]] = None,
        exit_status: int = 1,
        log_category: str = "LIMIT"
    ):
        super().__init__(message)
        self.message = message
        self.error_code = error_code
        self.user_message = user_message or message
        self.debug_info = debug_info or {}
        self.exit_status = exit_status
        self.log_category = log_category

    def log(self, logger: logging.Logger, command: str = ""):
        """
        Log this exception with structured format.

        Args:
            logger: Logger instance to use
            command: CLI subcommand (or library entry point) that failed
        """
        log_message = (
            f"[{self.log_category}] [{self.error_code}] {self.__class__.__name__}: {self.message}\n"
            f"  User Message: \"{self.user_message}\"\n"
            f"  Command: {command}\n"
            f"  Debug: {self.debug_info}")

        if self.log_category == "CRITICAL":
            logger.critical(log_message, exc_info=True)
        elif self.log_category == "LIMIT":
            logger.error(log_message)
        else:  # INPUT
            logger.warning(log_message)
