import logging

from app.cli.output import write_output
from app.core.config import EngineLimits
from app.services.enumeration_service import EnumerationService

logger = logging.getLogger(__name__)


def register(subparsers, parents) -> None:
    parser = subparsers.add_parser("enumerate", parents=parents, help="list every table of an order")
    parser.add_argument("--order", type=int, required=True)
    parser.add_argument("--totals-only", action="store_true", help="total tables only")
    parser.add_argument("--count-only", action="store_true", help="print the number of tables")
    parser.set_defaults(handler=run)


def run(args, limits: EngineLimits) -> int:
    if args.count_only:
        count = EnumerationService.check_budget(args.order, args.totals_only, limits)
        write_output(f"{count}\n", args.output)
        return 0
    codes = [m.code for m in EnumerationService.enumerate_tables(args.order, args.totals_only, limits)]
    logger.info("Enumerated %d tables of order %d", len(codes), args.order)
    write_output("".join(f"{code}\n" for code in codes), args.output)
    return 0
