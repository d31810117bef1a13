import logging

from app.cli.output import write_output
from app.core.config import EngineLimits
from app.core.database import session_scope
from app.models.catalog import VerificationKind
from app.seeds.paper_fixture import load_paper_fixture
from app.services.algebra_check_service import AlgebraCheckService
from app.services.catalog_service import CatalogService
from app.services.enumeration_service import EnumerationService
from app.services.paper_verification_service import PaperVerificationService
from app.services.report_renderer import ReportRenderer

logger = logging.getLogger(__name__)


def register(subparsers, parents) -> None:
    parser = subparsers.add_parser(
        "verify-paper", parents=parents, help="compare order-2 computations with the printed tables",
    )
    parser.add_argument("--jobs", type=int, default=1)
    parser.add_argument("--seed", type=int, help="seed for the linearity spot checks")
    parser.add_argument("--trials", type=int, help="random trials per linearity spot check")
    parser.add_argument("--store", action="store_true", help="save the outcome in the catalog database")
    parser.set_defaults(handler=run)


def run(args, limits: EngineLimits) -> int:
    fixture = load_paper_fixture()
    seed = limits.default_seed if args.seed is None else args.seed
    trials = limits.default_trials if args.trials is None else args.trials

    report = EnumerationService.classify(fixture.order, jobs=args.jobs, limits=limits)
    outcome = PaperVerificationService.verify_against_paper(report, fixture)
    outcome.extend(
        AlgebraCheckService.cross_check_theorem2(fixture.order, seed=seed, trials=trials, jobs=args.jobs, limits=limits)
    )

    if args.store:
        with session_scope(limits.database_url) as db:
            CatalogService.save_verification(db, outcome, VerificationKind.paper, seed)

    write_output(ReportRenderer.render_outcome(outcome), args.output)
    if outcome.mismatch_count:
        logger.warning("%d mismatches with the printed tables", outcome.mismatch_count)
    return outcome.exit_code
