# =====================================================================
# FILE: app/services/catalog_service.py
# =====================================================================

from sqlalchemy.orm import Session
from typing import List, Optional
import logging

from app.core.exceptions import CatalogError
from app.models.catalog import (
    ClassificationRun, MagmaClassRecord, VerificationRun, VerificationKind, VerificationStatus
)
from app.schemas.report import ClassificationReport, ClassRecord, VerificationOutcome

logger = logging.getLogger(__name__)


class CatalogService:
    """Persist classification and verification runs"""

    # ============================================================
    # CLASSIFICATION RUNS
    # ============================================================
    @staticmethod
    def save_report(db: Session, report: ClassificationReport) -> ClassificationRun:
        run = ClassificationRun(
            order=report.order,
            totals_only=report.totals_only,
            with_alpha_sets=bool(report.classes) and report.classes[0].wpe is not None,
            table_count=report.table_count,
            class_count=report.class_count,
        )
        db.add(run)
        db.flush()

        for record in report.classes:
            db.add(MagmaClassRecord(run_id=run.id, **record.model_dump()))

        db.commit()
        db.refresh(run)
        logger.info("Stored classification run %d (order %d, %d classes)", run.id, run.order, run.class_count)
        return run

    @staticmethod
    def get_run(db: Session, run_id: int) -> ClassificationRun:
        run = db.query(ClassificationRun).filter_by(id=run_id).first()
        if not run:
            raise CatalogError(f"classification run {run_id} not found")
        return run

    @staticmethod
    def load_report(db: Session, run_id: int) -> ClassificationReport:
        run = CatalogService.get_run(db, run_id)
        return ClassificationReport(
            order=run.order,
            totals_only=run.totals_only,
            table_count=run.table_count,
            class_count=run.class_count,
            classes=[ClassRecord.model_validate(c) for c in run.classes],
        )

    @staticmethod
    def list_runs(db: Session, order: Optional[int] = None) -> List[ClassificationRun]:
        query = db.query(ClassificationRun)
        if order is not None:
            query = query.filter_by(order=order)
        return query.order_by(ClassificationRun.id).all()

    @staticmethod
    def find_run(db: Session, order: int, totals_only: bool = False) -> Optional[ClassificationRun]:
        """Latest stored run for this order, if any"""
        return (
            db.query(ClassificationRun)
            .filter_by(order=order, totals_only=totals_only)
            .order_by(ClassificationRun.id.desc())
            .first()
        )

    # ============================================================
    # VERIFICATION RUNS
    # ============================================================
    @staticmethod
    def save_verification(
        db: Session, outcome: VerificationOutcome, kind: VerificationKind, seed: Optional[int] = None
    ) -> VerificationRun:
        run = VerificationRun(
            kind=kind,
            status=VerificationStatus.mismatch if outcome.mismatch_count else VerificationStatus.match,
            match_count=outcome.match_count,
            mismatch_count=outcome.mismatch_count,
            note_count=outcome.note_count,
            seed=seed,
            entries=[e.model_dump(mode="json") for e in outcome.entries],
            summary=list(outcome.summary),
        )
        db.add(run)
        db.commit()
        db.refresh(run)
        logger.info("Stored %s verification run %d (%s)", kind.value, run.id, run.status.value)
        return run
