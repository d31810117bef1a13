from app.cli.output import write_output
from app.core.config import EngineLimits
from app.core.database import session_scope
from app.core.exceptions import UsageError
from app.services.catalog_service import CatalogService
from app.services.report_renderer import OutputFormat, ReportRenderer


def register(subparsers, parents) -> None:
    parser = subparsers.add_parser("report", parents=parents, help="render a stored classification run")
    group = parser.add_mutually_exclusive_group()
    group.add_argument("--run-id", type=int)
    group.add_argument("--list", action="store_true", help="list stored runs")
    parser.add_argument("--format", choices=[f.value for f in OutputFormat], default=OutputFormat.json.value)
    parser.set_defaults(handler=run)


def run(args, limits: EngineLimits) -> int:
    if not args.list and args.run_id is None:
        raise UsageError("report needs --run-id or --list")
    with session_scope(limits.database_url) as db:
        if args.list:
            text = ReportRenderer.render_runs(CatalogService.list_runs(db))
        else:
            text = ReportRenderer.render(CatalogService.load_report(db, args.run_id), OutputFormat(args.format))
    write_output(text, args.output)
    return 0
