# =====================================================================
# FILE: app/cli/main.py
# =====================================================================

import argparse
import logging
from typing import List, Optional

from app.cli.commands import algebra_check, check, classify, enumerate_tables, report, verify_paper
from app.core.config import DEFAULT_LIMITS
from app.core.exceptions import MagmaError, UsageError
from app.core.logging_config import configure_logging

logger = logging.getLogger(__name__)

COMMANDS = [enumerate_tables, classify, check, verify_paper, algebra_check, report]


class CommandParser(argparse.ArgumentParser):
    """argparse exits with status 2 on bad flags; here 2 means "mismatch found", so raise instead"""

    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


def positive_int(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text}")
    return value


def build_parser() -> CommandParser:
    common = CommandParser(add_help=False)
    common.add_argument("--verbose", action="store_true", help="debug logging on stderr")
    common.add_argument("--output", help="write the data payload to this path instead of stdout")
    common.add_argument("--max-tables", type=positive_int, help="enumeration budget in tables")
    common.add_argument("--database", help="catalog database URL")

    parser = CommandParser(
        prog="hom-magma",
        description="Enumerate, classify and verify Hom-associative partial magmas",
    )
    subparsers = parser.add_subparsers(dest="command", required=True, metavar="command")
    for command in COMMANDS:
        command.register(subparsers, [common])
    return parser


def run(argv: Optional[List[str]] = None) -> int:
    """Exit status: 0 evaluated and all match, 2 evaluated with a mismatch, 1 error"""
    configure_logging()
    try:
        args = build_parser().parse_args(argv)
        if args.verbose:
            configure_logging(verbose=True)
        limits = DEFAULT_LIMITS.with_overrides(
            max_enumeration_tables=args.max_tables,
            database_url=args.database,
        )
        return args.handler(args, limits)
    except MagmaError as exc:
        logger.error(exc.detail)
        return exc.exit_code
    except Exception:
        logger.exception("internal error")
        return 1
