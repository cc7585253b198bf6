import argparse
import logging
import sys
from typing import Optional, Sequence

from pydantic import ValidationError

from fatpoints.cli.router import register_commands
from fatpoints.core.config import settings
from fatpoints.core.errors import FatPointsError

logger = logging.getLogger("fatpoints")

EXIT_OK = 0
EXIT_DISAGREE = 1
EXIT_INVALID = 2


def configure_logging(verbosity: int = 0) -> None:
    level = settings.LOG_LEVEL
    if verbosity == 1:
        level = "INFO"
    elif verbosity > 1:
        level = "DEBUG"
    logging.basicConfig(stream=sys.stderr, format="%(name)s:%(levelname)s:%(message)s")
    logger.setLevel(level)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog=settings.PROJECT_NAME,
        description="Linear systems through fat points in P^n: Cremona reduction, "
        "(-1)-classes and dimension counts.",
    )
    parser.add_argument(
        "-v", "--verbose", action="count", default=0, help="log to stderr (-vv for debug)"
    )
    subparsers = parser.add_subparsers(dest="command", required=True)
    register_commands(subparsers)
    return parser


def run(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_INVALID
    configure_logging(args.verbose)
    try:
        return args.handler(args)
    except (FatPointsError, ValidationError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID
