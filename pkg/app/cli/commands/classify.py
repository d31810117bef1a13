import argparse
import logging

from app.algebra.iso import burnside_class_count
from app.cli.output import write_output
from app.core.config import EngineLimits
from app.core.database import session_scope
from app.services.catalog_service import CatalogService
from app.services.enumeration_service import EnumerationService
from app.services.report_renderer import OutputFormat, ReportRenderer

logger = logging.getLogger(__name__)


def register(subparsers, parents) -> None:
    parser = subparsers.add_parser("classify", parents=parents, help="partition tables into isomorphism classes")
    parser.add_argument("--order", type=int, required=True)
    parser.add_argument("--totals-only", action="store_true", help="classify total tables only")
    parser.add_argument("--format", choices=[f.value for f in OutputFormat], default=OutputFormat.json.value)
    parser.add_argument("--jobs", type=int, default=1, help="worker processes over index ranges")
    parser.add_argument(
        "--count-only", action="store_true",
        help="print the class count next to the Burnside count; exit 2 if they differ",
    )
    parser.add_argument(
        "--alpha-sets", action=argparse.BooleanOptionalAction, default=None,
        help="compute the four alpha-sets per class (default: only up to order 2)",
    )
    parser.add_argument("--store", action="store_true", help="save the report in the catalog database")
    parser.set_defaults(handler=run)


def run(args, limits: EngineLimits) -> int:
    if args.count_only:
        count = EnumerationService.count_classes(args.order, args.totals_only, args.jobs, limits)
        expected = burnside_class_count(args.order, args.totals_only, limits)
        write_output(f"{count} classes (Burnside count {expected})\n", args.output)
        return 0 if count == expected else 2

    with_alpha_sets = args.order <= 2 if args.alpha_sets is None else args.alpha_sets
    report = EnumerationService.classify(
        args.order, args.totals_only, with_alpha_sets=with_alpha_sets, jobs=args.jobs, limits=limits
    )
    if args.store:
        with session_scope(limits.database_url) as db:
            run_record = CatalogService.save_report(db, report)
            logger.info("Saved as run %d", run_record.id)
    write_output(ReportRenderer.render(report, OutputFormat(args.format)), args.output)
    return 0
