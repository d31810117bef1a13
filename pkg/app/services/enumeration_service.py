# =====================================================================
# FILE: app/services/enumeration_service.py
# =====================================================================

from concurrent.futures import ProcessPoolExecutor
from typing import Dict, Iterator, List, Tuple
import itertools
import logging
import time

from app.algebra.iso import Digits, canonical_digits, check_iso_order, digit_actions, from_digits, to_digits
from app.algebra.partial import PartialMagma
from app.algebra.predicates import ALPHA_SET_KINDS, alpha_set, is_associative, is_partially_associative
from app.core.config import DEFAULT_LIMITS, EngineLimits
from app.core.exceptions import BudgetExceededError
from app.schemas.fixture import FIXTURE_ORDER
from app.schemas.report import ClassificationReport, ClassRecord
from app.seeds.paper_fixture import load_paper_fixture

logger = logging.getLogger(__name__)

IndexRange = Tuple[int, int]


# ============================================================
# RANGE WORKERS (module level so a process pool can pickle them)
# ============================================================
def table_digits(index: int, order: int, totals_only: bool = False) -> Digits:
    """Table number `index` as its base expansion, most significant cell first"""
    base = order if totals_only else order + 1
    digits = [0] * (order * order)
    for cell in range(len(digits) - 1, -1, -1):
        index, digits[cell] = divmod(index, base)
    return tuple(digits)


def _range_tables(order: int, totals_only: bool, start: int, stop: int) -> Iterator[Digits]:
    # starts at table `start` directly; the last cell is the least significant
    base = order if totals_only else order + 1
    digits = list(table_digits(start, order, totals_only))
    for _ in range(start, stop):
        yield tuple(digits)
        cell = len(digits) - 1
        while cell >= 0:
            digits[cell] += 1
            if digits[cell] < base:
                break
            digits[cell] = 0
            cell -= 1



def _classify_range(order: int, totals_only: bool, start: int, stop: int) -> Dict[Digits, List[Digits]]:
    actions = digit_actions(order)
    classes: Dict[Digits, List[Digits]] = {}
    for digits in _range_tables(order, totals_only, start, stop):
        classes.setdefault(canonical_digits(digits, actions), []).append(digits)
    return classes


def _count_range(order: int, totals_only: bool, start: int, stop: int) -> int:
    # a table is counted once per orbit: when it is its own canonical form
    actions = digit_actions(order)
    return sum(
        1 for digits in _range_tables(order, totals_only, start, stop)
        if canonical_digits(digits, actions) == digits
    )


def _class_record_fields(order: int, rep: Digits) -> Dict[str, object]:
    m = from_digits(rep, order)
    fields: Dict[str, object] = {
        name: [f.code for f in alpha_set(m, kind)] for name, kind in ALPHA_SET_KINDS.items()
    }
    fields["passoc"] = is_partially_associative(m)
    fields["assoc"] = is_associative(m)
    return fields


class EnumerationService:
    """Exhaustive enumeration and PM-classification of partial magmas"""

    # ============================================================
    # ENUMERATION
    # ============================================================
    @staticmethod
    def table_count(order: int, totals_only: bool = False) -> int:
        base = order if totals_only else order + 1
        return base ** (order * order)

    @staticmethod
    def check_budget(order: int, totals_only: bool = False, limits: EngineLimits = DEFAULT_LIMITS) -> int:
        if order < 1:
            raise BudgetExceededError(f"order must be positive, got {order}")
        count = EnumerationService.table_count(order, totals_only)
        if count > limits.max_enumeration_tables:
            raise BudgetExceededError(
                f"order {order} has {count} tables, over the budget of {limits.max_enumeration_tables}"
            )
        return count

    @staticmethod
    def enumerate_tables(
        order: int, totals_only: bool = False, limits: EngineLimits = DEFAULT_LIMITS
    ) -> Iterator[PartialMagma]:
        """Every table once; table k is the base-(n+1) expansion of k, so the stream is in code order"""
        count = EnumerationService.check_budget(order, totals_only, limits)
        for digits in _range_tables(order, totals_only, 0, count):
            yield from_digits(digits, order)

    @staticmethod
    def index_ranges(total: int, jobs: int) -> List[IndexRange]:
        jobs = max(1, min(jobs, total))
        size, extra = divmod(total, jobs)
        ranges, start = [], 0
        for j in range(jobs):
            stop = start + size + (1 if j < extra else 0)
            ranges.append((start, stop))
            start = stop
        return ranges

    @staticmethod
    def _run_ranges(worker, order: int, totals_only: bool, total: int, jobs: int) -> list:
        ranges = EnumerationService.index_ranges(total, jobs)
        args = [(order, totals_only, start, stop) for start, stop in ranges]
        if len(ranges) == 1:
            return [worker(*args[0])]
        with ProcessPoolExecutor(max_workers=len(ranges)) as pool:
            # map() yields in submission order, so merges follow index order
            return list(pool.map(worker, *zip(*args)))

    # ============================================================
    # CLASSIFICATION
    # ============================================================
    @staticmethod
    def count_classes(
        order: int, totals_only: bool = False, jobs: int = 1, limits: EngineLimits = DEFAULT_LIMITS
    ) -> int:
        total = EnumerationService.check_budget(order, totals_only, limits)
        check_iso_order(order, limits)
        started = time.perf_counter()
        count = sum(EnumerationService._run_ranges(_count_range, order, totals_only, total, jobs))
        logger.info(
            "Counted %d classes among %d tables of order %d in %.2fs (jobs=%d)",
            count, total, order, time.perf_counter() - started, jobs,
        )
        return count

    @staticmethod
    def classify(
        order: int,
        totals_only: bool = False,
        with_alpha_sets: bool = True,
        jobs: int = 1,
        limits: EngineLimits = DEFAULT_LIMITS,
    ) -> ClassificationReport:
        """Partition all tables into PM-isomorphism classes, each listed under its canonical form"""
        total = EnumerationService.check_budget(order, totals_only, limits)
        check_iso_order(order, limits)
        started = time.perf_counter()

        merged: Dict[Digits, List[Digits]] = {}
        for partial in EnumerationService._run_ranges(_classify_range, order, totals_only, total, jobs):
            for rep, members in partial.items():
                merged.setdefault(rep, []).extend(members)

        # order 2 keeps the printed item numbers; otherwise fewer defined cells first, then lexicographic
        printed = EnumerationService.printed_items(order)
        if printed:
            numbered = sorted((printed[from_digits(rep, order).code], rep) for rep in merged)
        else:
            reps = sorted(merged, key=lambda d: (sum(1 for v in d if v != order), d))
            numbered = list(enumerate(reps, start=1))
        reps = [rep for _, rep in numbered]
        logger.info("Found %d classes among %d tables of order %d", len(reps), total, order)

        fields: List[Dict[str, object]] = [{} for _ in reps]
        if with_alpha_sets:
            fields = EnumerationService._alpha_fields(order, reps, jobs)

        classes = [
            ClassRecord(
                item=item,
                rep=from_digits(rep, order).code,
                members=[from_digits(d, order).code for d in merged[rep]],
                **extra,
            )
            for (item, rep), extra in zip(numbered, fields)
        ]
        logger.info("Classified order %d in %.2fs (jobs=%d)", order, time.perf_counter() - started, jobs)
        return ClassificationReport(
            order=order,
            totals_only=totals_only,
            table_count=total,
            class_count=len(classes),
            classes=classes,
        )

    @staticmethod
    def printed_items(order: int) -> Dict[str, int]:
        """Member code -> printed item number; empty for orders without printed tables"""
        if order != FIXTURE_ORDER:
            return {}
        return {code: fc.item for fc in load_paper_fixture().classes for code in fc.members}

    @staticmethod
    def _alpha_fields(order: int, reps: List[Digits], jobs: int) -> List[Dict[str, object]]:
        if jobs <= 1 or len(reps) < 2:
            return [_class_record_fields(order, rep) for rep in reps]
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            chunk = max(1, len(reps) // (4 * jobs))
            return list(pool.map(_class_record_fields, itertools.repeat(order), reps, chunksize=chunk))

    @staticmethod
    def class_fields(m: PartialMagma) -> Dict[str, object]:
        """Alpha-sets and associativity flags of one table, as stored in a ClassRecord"""
        return _class_record_fields(m.order, to_digits(m))
