"""Command-line entry point."""

import logging
from typing import List, Optional

from dotenv import load_dotenv

from ..config import get_config
from ..errors import ConfigError, DataError, DomainError
from .commands import COMMANDS, parse_theta
from .parser import build_parser, parse_args

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_DATA = 2
EXIT_DOMAIN = 3


def _configure_logging(level: Optional[str]) -> None:
    config = get_config().logging
    name = (level or config.level).upper()
    if not isinstance(logging.getLevelName(name), int):
        raise ConfigError(f"unknown log level {name!r}")
    logging.basicConfig(level=name, format=config.format)


def main(argv: Optional[List[str]] = None) -> int:
    """Run one subcommand and return its exit status."""
    load_dotenv()  # Load from .env file if present
    args = parse_args(argv)
    try:
        _configure_logging(args.log_level)
        return COMMANDS[args.command](args)
    except ConfigError as e:
        logger.error("Configuration error: %s", e)
        return EXIT_USAGE
    except DomainError as e:
        logger.error("Domain error: %s", e)
        return EXIT_DOMAIN
    except (DataError, OSError) as e:
        logger.error("Data error: %s", e)
        return EXIT_DATA


__all__ = ["main", "build_parser", "parse_args", "parse_theta"]
