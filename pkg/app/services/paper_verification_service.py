# =====================================================================
# FILE: app/services/paper_verification_service.py
# =====================================================================

from typing import Dict, Iterable, List
import logging

from app.algebra.iso import are_isomorphic, conjugate
from app.algebra.magma_algebra import AlgebraKind, HomAlgebraInstance, evaluate_algebra
from app.algebra.partial import PartialMagma, all_partial_maps, decode, decode_map, sort_maps
from app.algebra.predicates import ALPHA_SET_KINDS, evaluate
from app.core.exceptions import OrderMismatchError
from app.schemas.fixture import AssociativityClaim, FixtureClass, FixtureExample, PaperFixture
from app.schemas.report import ClassificationReport, ClassRecord, MatchStatus, VerificationOutcome
from app.services.enumeration_service import EnumerationService

logger = logging.getLogger(__name__)

CLASSES = "classes"
ALPHA_SETS = "alpha-sets"
EXAMPLES = "algebra examples"

# Example bullets, in printed order, and the algebra property behind each
EXAMPLE_BULLETS: Dict[str, AlgebraKind] = {
    "partially_multiplicative": AlgebraKind.partially_multiplicative,
    "multiplicative": AlgebraKind.multiplicative,
    "partially_hom_associative": AlgebraKind.partially_hom_assoc,
    "hom_associative": AlgebraKind.hom_assoc,
}


def normalize_codes(codes: Iterable[str], order: int = 2) -> List[str]:
    """Map codes in canonical order, duplicates dropped"""
    return [f.code for f in sort_maps(decode_map(c, order) for c in codes)]


def format_items(items: List[int]) -> str:
    """[1, 2, 3, 7] -> "(1)-(3), (7)" """
    parts, i = [], 0
    while i < len(items):
        j = i
        while j + 1 < len(items) and items[j + 1] == items[j] + 1:
            j += 1
        if j - i >= 1:
            parts.append(f"({items[i]})-({items[j]})")
        else:
            parts.append(f"({items[i]})")
        i = j + 1
    return ", ".join(parts)


class PaperVerificationService:
    """Compare a computed order-2 classification with the printed tables"""

    @staticmethod
    def verify_against_paper(report: ClassificationReport, fixture: PaperFixture) -> VerificationOutcome:
        if report.order != fixture.order:
            raise OrderMismatchError(
                f"the printed tables are for order {fixture.order}, report has order {report.order}"
            )
        outcome = VerificationOutcome(name="paper")
        PaperVerificationService._check_classes(report, fixture, outcome)

        fields_by_item = {
            c.item: EnumerationService.class_fields(decode(c.first)) for c in fixture.classes
        }
        PaperVerificationService._check_alpha_sets(report, fixture, fields_by_item, outcome)
        PaperVerificationService._check_associativity(fixture, fields_by_item, outcome)
        for example in fixture.examples:
            PaperVerificationService._check_example(example, fixture, outcome)

        logger.info(
            "Verification against the printed tables: %d match, %d mismatch, %d note",
            outcome.match_count, outcome.mismatch_count, outcome.note_count,
        )
        return outcome

    # ============================================================
    # ISOMORPHISM CLASSES
    # ============================================================
    @staticmethod
    def _check_classes(report: ClassificationReport, fixture: PaperFixture, outcome: VerificationOutcome):
        outcome.compare(
            len(fixture.classes), report.class_count,
            section=CLASSES, subject=f"order {report.order}", check="class count",
        )
        for fc in fixture.classes:
            record = report.find(fc.first)
            computed = sorted(record.members) if record else []
            outcome.compare(
                sorted(fc.members), computed,
                section=CLASSES, item=str(fc.item), subject=" ≅ ".join(fc.members), check="members",
            )
            if record is None:
                continue
            # lex-least canonical form versus the table printed first
            status = MatchStatus.match if record.rep == fc.first else MatchStatus.note
            outcome.add(
                status,
                section=CLASSES, item=str(fc.item), subject=fc.first, check="representative",
                expected=fc.first, computed=record.rep,
            )

    # ============================================================
    # ALPHA-SETS
    # ============================================================
    @staticmethod
    def _check_alpha_sets(
        report: ClassificationReport,
        fixture: PaperFixture,
        fields_by_item: Dict[int, Dict[str, object]],
        outcome: VerificationOutcome,
    ):
        for fc in fixture.classes:
            m = decode(fc.first)
            computed = fields_by_item[fc.item]
            for name, kind in ALPHA_SET_KINDS.items():
                expected = normalize_codes(getattr(fc, name))
                found = computed[name]
                entry = outcome.compare(
                    expected, found,
                    section=ALPHA_SETS, item=str(fc.item), subject=fc.first, check=name,
                )
                if entry.status == MatchStatus.mismatch:
                    entry.witness = PaperVerificationService._set_witness(m, kind, expected, found)

            record = report.find(fc.first)
            if record is not None and record.rep != fc.first and record.wpe is not None:
                PaperVerificationService._check_equivariance(fc, record, computed, outcome)

    @staticmethod
    def _set_witness(m: PartialMagma, kind, expected: List[str], found: List[str]) -> str:
        notes = []
        for code in expected:
            if code not in found:
                result = evaluate(m, decode_map(code, m.order), kind)
                notes.append(f"{code} fails {result.witness.describe() if result.witness else result.reason}")
        notes.extend(f"{code} holds" for code in found if code not in expected)
        return "; ".join(notes)

    @staticmethod
    def _check_equivariance(
        fc: FixtureClass, record: ClassRecord, computed: Dict[str, object], outcome: VerificationOutcome
    ):
        """Sets of the printed table must be the conjugates of the canonical representative's sets"""
        rep, first = decode(record.rep), decode(fc.first)
        phi = are_isomorphic(rep, first)
        for name in ALPHA_SET_KINDS:
            maps = [decode_map(code, rep.order) for code in getattr(record, name)]
            conjugated = [f.code for f in sort_maps(conjugate(alpha, phi) for alpha in maps)]
            outcome.compare(
                computed[name], conjugated,
                section=ALPHA_SETS, item=str(fc.item), subject=f"{record.rep} → {fc.first}",
                check=f"{name} conjugation by {phi.code}",
            )

    # ============================================================
    # ASSOCIATIVITY LISTS
    # ============================================================
    @staticmethod
    def _check_associativity(
        fixture: PaperFixture, fields_by_item: Dict[int, Dict[str, object]], outcome: VerificationOutcome
    ):
        computed = {
            "passoc": [item for item, f in sorted(fields_by_item.items()) if f["passoc"]],
            "assoc": [item for item, f in sorted(fields_by_item.items()) if f["assoc"]],
        }
        claims = {"passoc": fixture.partially_associative, "assoc": fixture.associative}
        labels = {"passoc": "partially associative", "assoc": "associative"}

        for key, claim in claims.items():
            PaperVerificationService._check_claim(labels[key], claim, computed[key], outcome)

        subset = set(computed["assoc"]) <= set(computed["passoc"])
        outcome.add(
            MatchStatus.match if subset else MatchStatus.mismatch,
            section=ALPHA_SETS, subject="associativity lists", check="associative ⊆ partially associative",
            expected=True, computed=subset,
        )

    @staticmethod
    def _check_claim(label: str, claim: AssociativityClaim, computed: List[int], outcome: VerificationOutcome):
        outcome.compare(
            claim.items, computed,
            section=ALPHA_SETS, subject=f"{label} classes", check="listed items",
        )
        entry = outcome.compare(
            claim.stated_count, len(computed),
            section=ALPHA_SETS, subject=f"{label} classes", check="stated count",
        )
        if entry.status == MatchStatus.mismatch:
            agrees = "agrees" if claim.items == computed else "disagrees"
            entry.witness = (
                f"the listed ranges {claim.listed} contain {len(claim.items)} classes; "
                f"the computed list of {len(computed)} {agrees} with them"
            )
        outcome.summary.append(
            f"{label}: stated {claim.stated_count} cases, listed {claim.listed} "
            f"({len(claim.items)} items); computed {len(computed)}: {format_items(computed)}"
        )

    # ============================================================
    # EXAMPLES
    # ============================================================
    @staticmethod
    def example_sets(m: PartialMagma) -> Dict[str, object]:
        """Algebra-level sets of every example bullet for H = (K[X], μ_∇, τ_α)"""
        maps = all_partial_maps(m.order)
        instances = [HomAlgebraInstance(m, alpha) for alpha in maps]
        sets: Dict[str, object] = {
            name: [h.alpha.code for h in instances if evaluate_algebra(h, kind).holds]
            for name, kind in EXAMPLE_BULLETS.items()
        }
        sets["multiplicative_hom_associative"] = [
            code for code in sets["multiplicative"] if code in sets["hom_associative"]
        ]
        h = instances[0]
        sets["associativity"] = [
            evaluate_algebra(h, AlgebraKind.partially_assoc).holds,
            evaluate_algebra(h, AlgebraKind.assoc).holds,
        ]
        return sets

    @staticmethod
    def _check_example(example: FixtureExample, fixture: PaperFixture, outcome: VerificationOutcome):
        m = decode(example.table)
        item = str(example.item)
        printed = fixture.by_item(example.item)
        outcome.compare(
            True, example.table in printed.members,
            section=EXAMPLES, item=example.label, subject=example.table, check=f"is magma ({item})",
        )
        computed = PaperVerificationService.example_sets(m)
        for name in (*EXAMPLE_BULLETS, "multiplicative_hom_associative"):
            outcome.compare(
                normalize_codes(getattr(example, name)), computed[name],
                section=EXAMPLES, item=example.label, subject=example.table, check=name,
            )
        outcome.compare(
            [example.partially_associative, example.associative], computed["associativity"],
            section=EXAMPLES, item=example.label, subject=example.table,
            check="partially associative, associative",
        )
