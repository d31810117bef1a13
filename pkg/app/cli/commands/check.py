from app.algebra.partial import decode, decode_map
from app.algebra.predicates import PredicateKind, evaluate
from app.cli.output import write_output
from app.core.config import EngineLimits
from app.core.exceptions import UsageError

MAP_FREE_KINDS = (PredicateKind.partial_assoc, PredicateKind.assoc)
TARGET_KINDS = (PredicateKind.weak_partial_endo, PredicateKind.partial_endo, PredicateKind.endo)


def register(subparsers, parents) -> None:
    parser = subparsers.add_parser("check", parents=parents, help="evaluate one predicate on one table")
    parser.add_argument("--table", required=True, help='table code, e.g. 1221 or "1,-,2,3,1,1,2,-,3"')
    parser.add_argument("--alpha", help="partial map code, e.g. 21")
    parser.add_argument("--kind", required=True, choices=[k.value for k in PredicateKind])
    parser.add_argument("--target", help="codomain table for the endomorphism kinds (default: --table)")
    parser.set_defaults(handler=run)


def run(args, limits: EngineLimits) -> int:
    """Prints the verdict; the exit status only reports whether evaluation succeeded"""
    kind = PredicateKind(args.kind)
    m = decode(args.table)
    if args.alpha is None and kind not in MAP_FREE_KINDS:
        raise UsageError(f"--kind {kind.value} needs --alpha")
    if args.target and kind not in TARGET_KINDS:
        raise UsageError(f"--target only applies to the endomorphism kinds, not {kind.value}")
    alpha = decode_map(args.alpha, m.order) if args.alpha is not None else None
    target = decode(args.target) if args.target else None

    result = evaluate(m, alpha, kind, target)
    lines = ["true" if result.holds else "false"]
    if result.witness:
        lines.append(f"witness: {result.witness.describe()}")
    elif result.reason:
        lines.append(f"reason: {result.reason}")
    write_output("\n".join(lines) + "\n", args.output)
    return 0
