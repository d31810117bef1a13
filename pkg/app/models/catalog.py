# =====================================================================
# FILE: app/models/catalog.py
# =====================================================================

from sqlalchemy import Boolean, Column, DateTime, Enum, ForeignKey, Integer, JSON, String
from sqlalchemy.orm import relationship
from app.core.database import Base
import enum
from datetime import datetime


# -------------------------------------------------------------
# ENUMS
# -------------------------------------------------------------
class VerificationKind(str, enum.Enum):
    paper = "paper"
    algebra = "algebra"


class VerificationStatus(str, enum.Enum):
    match = "match"
    mismatch = "mismatch"


# -------------------------------------------------------------
# CLASSIFICATION RUNS
# -------------------------------------------------------------
class ClassificationRun(Base):
    """One stored classify() result"""
    __tablename__ = "classification_runs"

    id = Column(Integer, primary_key=True, index=True)
    order = Column(Integer, nullable=False, index=True)
    totals_only = Column(Boolean, default=False)
    with_alpha_sets = Column(Boolean, default=True)
    table_count = Column(Integer, nullable=False)
    class_count = Column(Integer, nullable=False)
    created_at = Column(DateTime(timezone=True), default=datetime.utcnow)

    classes = relationship(
        "MagmaClassRecord",
        back_populates="run",
        cascade="all, delete-orphan",
        order_by="MagmaClassRecord.item",
    )


class MagmaClassRecord(Base):
    """One isomorphism class of a run; alpha-sets are JSON lists of map codes"""
    __tablename__ = "magma_classes"

    id = Column(Integer, primary_key=True, index=True)
    run_id = Column(Integer, ForeignKey("classification_runs.id", ondelete="CASCADE"), index=True)
    item = Column(Integer, nullable=False)

    rep = Column(String, nullable=False, index=True)
    members = Column(JSON, nullable=False)  # ["1333", "3332"]

    wpe = Column(JSON, nullable=True)
    pe = Column(JSON, nullable=True)
    pha = Column(JSON, nullable=True)
    ha = Column(JSON, nullable=True)
    passoc = Column(Boolean, nullable=True)
    assoc = Column(Boolean, nullable=True)

    run = relationship("ClassificationRun", back_populates="classes")


# -------------------------------------------------------------
# VERIFICATION RUNS
# -------------------------------------------------------------
class VerificationRun(Base):
    __tablename__ = "verification_runs"

    id = Column(Integer, primary_key=True, index=True)
    kind = Column(Enum(VerificationKind), nullable=False)
    status = Column(Enum(VerificationStatus), nullable=False)
    match_count = Column(Integer, default=0)
    mismatch_count = Column(Integer, default=0)
    note_count = Column(Integer, default=0)
    seed = Column(Integer, nullable=True)
    entries = Column(JSON, nullable=False)  # VerificationEntry dicts
    summary = Column(JSON, nullable=True)
    created_at = Column(DateTime(timezone=True), default=datetime.utcnow)
