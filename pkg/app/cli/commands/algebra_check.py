from app.cli.output import write_output
from app.core.config import EngineLimits
from app.core.database import session_scope
from app.models.catalog import VerificationKind
from app.services.algebra_check_service import AlgebraCheckService
from app.services.catalog_service import CatalogService
from app.services.report_renderer import ReportRenderer


def register(subparsers, parents) -> None:
    parser = subparsers.add_parser(
        "algebra-check", parents=parents, help="cross-check K[X] predicates against magma predicates",
    )
    parser.add_argument("--order", type=int, default=2)
    parser.add_argument(
        "--sample", type=int,
        help="random (table, map) cases instead of the full grid (default: full grid up to order 2)",
    )
    parser.add_argument("--seed", type=int)
    parser.add_argument("--trials", type=int, help="random vector triples per Hom-associative instance")
    parser.add_argument("--jobs", type=int, default=1)
    parser.add_argument("--store", action="store_true")
    parser.set_defaults(handler=run)


def run(args, limits: EngineLimits) -> int:
    seed = limits.default_seed if args.seed is None else args.seed
    trials = limits.default_trials if args.trials is None else args.trials
    sample = args.sample
    if sample is None and args.order > 2:
        sample = limits.default_sample

    outcome = AlgebraCheckService.cross_check_theorem2(
        args.order, sample=sample, seed=seed, trials=trials, jobs=args.jobs, limits=limits
    )
    if sample is None:
        outcome.extend(AlgebraCheckService.randomized_sweep(args.order, trials, seed, limits))

    if args.store:
        with session_scope(limits.database_url) as db:
            CatalogService.save_verification(db, outcome, VerificationKind.algebra, seed)

    write_output(ReportRenderer.render_outcome(outcome), args.output)
    return outcome.exit_code
