"""Command-line front end."""

import logging
import sys

from codewidth import setup_logging
from codewidth.common.config_validator import validate_config
from codewidth.core.exceptions import CodeWidthException, InvalidConfigError
from .parser import create_parser

logger = logging.getLogger(__name__)


def main(argv=None) -> int:
    parser = create_parser()
    args = parser.parse_args(argv)

    try:
        # Check configuration before anything reads it
        invalid_vars = validate_config()
        if invalid_vars:
            raise InvalidConfigError(invalid_vars)
        setup_logging(args.log_level)
        return args.handler(args)
    except CodeWidthException as error:
        error.log(logger, command=args.command)
        print(f"Error [{error.error_code}]: {error.user_message}", file=sys.stderr)
        if error.message != error.user_message:
            print(f"  {error.message}", file=sys.stderr)
        return error.exit_status
    except OSError as error:
        logger.error(f"I/O error in {args.command}: {error}")
        print(f"Error: {error}", file=sys.stderr)
        return 2


__all__ = ['main', 'create_parser']
