# =====================================================================
# FILE: app/services/algebra_check_service.py
# =====================================================================

from concurrent.futures import ProcessPoolExecutor
from typing import List, Optional, Tuple
import logging
import random
import time

from app.algebra.iso import from_digits
from app.algebra.magma_algebra import (
    MAGMA_COUNTERPART,
    AlgebraKind,
    HomAlgebraInstance,
    evaluate_algebra,
    linearity_check,
    randomized_bilinear_check,
)
from app.algebra.partial import all_partial_maps, decode, decode_map, identity
from app.algebra.predicates import PredicateKind, evaluate
from app.core.config import DEFAULT_LIMITS, EngineLimits
from app.schemas.report import MatchStatus, VerificationOutcome
from app.services.enumeration_service import EnumerationService, table_digits

logger = logging.getLogger(__name__)

SECTION = "algebra equivalences"

# (label, algebra property) checked for every (table, α) pair
PAIR_EQUIVALENCES: List[Tuple[str, AlgebraKind]] = [
    ("b", AlgebraKind.partially_multiplicative),
    ("b'", AlgebraKind.multiplicative),
    ("c", AlgebraKind.partially_hom_assoc),
    ("c'", AlgebraKind.hom_assoc),
]
# checked once per table, τ = id
TABLE_EQUIVALENCES: List[Tuple[str, AlgebraKind]] = [
    ("d", AlgebraKind.partially_assoc),
    ("e", AlgebraKind.assoc),
]

Case = Tuple[str, str]
MAX_WITNESSES = 5


def _disagreement(label: str, kind: AlgebraKind, table: str, alpha: str) -> Optional[str]:
    m = decode(table)
    h = HomAlgebraInstance(m, decode_map(alpha, m.order))
    algebra = evaluate_algebra(h, kind)
    magma = evaluate(m, h.alpha, MAGMA_COUNTERPART[kind])
    if algebra.holds == magma.holds:
        return None
    failing = algebra if not algebra.holds else magma
    where = failing.witness.describe() if failing.witness else failing.reason
    return (
        f"({label}) ∇={table} α={alpha}: algebra {kind.value}={algebra.holds}, "
        f"magma {MAGMA_COUNTERPART[kind].value}={magma.holds} [{where}]"
    )


def _check_case(table: str, alpha: str) -> List[Tuple[str, str]]:
    """Failing pair-level equivalences of one (table, α) case"""
    found = []
    for label, kind in PAIR_EQUIVALENCES:
        message = _disagreement(label, kind, table, alpha)
        if message:
            found.append((label, message))
    return found


def _check_table(table: str) -> List[Tuple[str, str]]:
    identity_code = identity(decode(table).order).code
    found = []
    for label, kind in TABLE_EQUIVALENCES:
        message = _disagreement(label, kind, table, identity_code)
        if message:
            found.append((label, message))
    return found


class AlgebraCheckService:
    """Cross-checks between K[X] predicates and partial-magma predicates"""

    # ============================================================
    # CASE SELECTION
    # ============================================================
    @staticmethod
    def grid_cases(order: int, limits: EngineLimits = DEFAULT_LIMITS) -> List[Case]:
        maps = [f.code for f in all_partial_maps(order)]
        return [
            (m.code, alpha)
            for m in EnumerationService.enumerate_tables(order, limits=limits)
            for alpha in maps
        ]

    @staticmethod
    def sample_cases(order: int, sample: int, seed: int) -> List[Case]:
        """Seeded random (table, α) pairs drawn uniformly by index"""
        rng = random.Random(seed)
        maps = [f.code for f in all_partial_maps(order)]
        total = EnumerationService.table_count(order)
        cases = []
        for _ in range(sample):
            digits = table_digits(rng.randrange(total), order)
            cases.append((from_digits(digits, order).code, rng.choice(maps)))
        return cases

    # ============================================================
    # ALGEBRA / MAGMA EQUIVALENCES
    # ============================================================
    @staticmethod
    def cross_check_theorem2(
        order: int,
        sample: Optional[int] = None,
        seed: int = 0,
        trials: Optional[int] = None,
        jobs: int = 1,
        limits: EngineLimits = DEFAULT_LIMITS,
    ) -> VerificationOutcome:
        """
        Every biconditional between algebra-level and magma-level predicates.

        Without `sample` the full grid of tables x maps is checked (729 cases at
        order 2); with it, a seeded sample of cases. Linearity of τ and
        bilinearity of μ are spot-checked on random vectors for every table.
        """
        trials = limits.default_trials if trials is None else trials
        started = time.perf_counter()
        if sample is None:
            cases = AlgebraCheckService.grid_cases(order, limits)
        else:
            cases = AlgebraCheckService.sample_cases(order, sample, seed)
        tables = sorted(set(table for table, _ in cases))

        if jobs > 1:
            with ProcessPoolExecutor(max_workers=jobs) as pool:
                pair_results = list(pool.map(_check_case, *zip(*cases), chunksize=max(1, len(cases) // (4 * jobs))))
                table_results = list(pool.map(_check_table, tables))
        else:
            pair_results = [_check_case(table, alpha) for table, alpha in cases]
            table_results = [_check_table(table) for table in tables]

        outcome = VerificationOutcome(
            name="algebra",
            parameters={"order": order, "cases": len(cases), "sample": sample, "seed": seed, "trials": trials},
        )
        AlgebraCheckService._record(outcome, PAIR_EQUIVALENCES, pair_results, len(cases), "cases")
        AlgebraCheckService._record(outcome, TABLE_EQUIVALENCES, table_results, len(tables), "tables")

        agreeing = sum(1 for found in pair_results if not found)
        outcome.summary.insert(0, f"{agreeing}/{len(cases)} equivalences hold")

        failures = AlgebraCheckService._linearity(order, tables, seed, trials)
        outcome.add(
            MatchStatus.match if not failures else MatchStatus.mismatch,
            section=SECTION, item="a", subject=f"{len(tables)} tables", check="τ linear, μ bilinear",
            expected=0, computed=len(failures), witness="; ".join(failures[:MAX_WITNESSES]) or None,
        )
        logger.info(
            "Equivalence check at order %d: %d/%d cases agree in %.2fs",
            order, agreeing, len(cases), time.perf_counter() - started,
        )
        return outcome

    @staticmethod
    def _record(outcome: VerificationOutcome, equivalences, results, total: int, unit: str) -> None:
        for label, kind in equivalences:
            messages = [message for found in results for lab, message in found if lab == label]
            outcome.add(
                MatchStatus.match if not messages else MatchStatus.mismatch,
                section=SECTION, item=label, subject=f"{total} {unit}",
                check=f"{kind.value} ⇔ {MAGMA_COUNTERPART[kind].value}",
                expected=total, computed=total - len(messages),
                witness="; ".join(messages[:MAX_WITNESSES]) or None,
            )
            outcome.summary.append(f"({label}) {kind.value}: {total - len(messages)}/{total} {unit}")

    @staticmethod
    def _linearity(order: int, tables: List[str], seed: int, trials: int) -> List[str]:
        failures = []
        maps = all_partial_maps(order)
        rng = random.Random(seed)
        for table in tables:
            h = HomAlgebraInstance(decode(table), rng.choice(maps))
            broken = linearity_check(h, trials, rng.randrange(2 ** 32))
            if broken:
                failures.append(f"∇={table} α={h.alpha.code}: {broken}")
        return failures

    # ============================================================
    # RANDOMIZED MULTILINEAR CHECKS
    # ============================================================
    @staticmethod
    def randomized_sweep(
        order: int, trials: int = 100, seed: int = 0, limits: EngineLimits = DEFAULT_LIMITS
    ) -> VerificationOutcome:
        """Random rational vectors on every Hom-associative (table, α); also multiplicativity where it holds"""
        outcome = VerificationOutcome(name="randomized", parameters={"trials": trials, "seed": seed})
        checked, failures = 0, []
        for table, alpha in AlgebraCheckService.grid_cases(order, limits):
            m = decode(table)
            h = HomAlgebraInstance(m, decode_map(alpha, order))
            if not evaluate(m, h.alpha, PredicateKind.hom_assoc).holds:
                continue
            multiplicative = evaluate(m, h.alpha, PredicateKind.partial_endo).holds
            checked += 1
            if not randomized_bilinear_check(h, trials, seed, multiplicative=multiplicative):
                failures.append(f"∇={table} α={alpha}")
        outcome.add(
            MatchStatus.match if not failures else MatchStatus.mismatch,
            section=SECTION, item="random", subject=f"{checked} Hom-associative instances",
            check=f"{trials} seeded vector triples", expected=checked, computed=checked - len(failures),
            witness="; ".join(failures[:MAX_WITNESSES]) or None,
        )
        outcome.summary.append(
            f"randomized: {checked - len(failures)}/{checked} Hom-associative instances pass {trials} trials (seed {seed})"
        )
        return outcome
