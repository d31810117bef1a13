# =====================================================================
# FILE: app/schemas/report.py
# =====================================================================

import enum
from typing import Any, Dict, List, Optional

from pydantic import BaseModel, Field


class MatchStatus(str, enum.Enum):
    match = "MATCH"
    mismatch = "MISMATCH"
    note = "NOTE"


# -------------------------------------------------------------
# CLASSIFICATION
# -------------------------------------------------------------
class ClassRecord(BaseModel):
    """One isomorphism class; alpha-sets are lists of map codes in canonical order"""
    item: int
    rep: str
    members: List[str]
    wpe: Optional[List[str]] = None
    pe: Optional[List[str]] = None
    pha: Optional[List[str]] = None
    ha: Optional[List[str]] = None
    passoc: Optional[bool] = None
    assoc: Optional[bool] = None

    class Config:
        from_attributes = True


class ClassificationReport(BaseModel):
    order: int
    totals_only: bool = False
    table_count: int
    class_count: int
    classes: List[ClassRecord] = Field(default_factory=list)

    class Config:
        from_attributes = True

    def find(self, code: str) -> Optional[ClassRecord]:
        """Class containing the table with this code"""
        for record in self.classes:
            if code in record.members:
                return record
        return None


# -------------------------------------------------------------
# VERIFICATION
# -------------------------------------------------------------
class VerificationEntry(BaseModel):
    section: str
    item: Optional[str] = None
    subject: str
    check: str
    status: MatchStatus
    expected: Optional[Any] = None
    computed: Optional[Any] = None
    witness: Optional[str] = None


class VerificationOutcome(BaseModel):
    name: str
    entries: List[VerificationEntry] = Field(default_factory=list)
    # human-readable lines printed with the outcome (computed lists, grid totals)
    summary: List[str] = Field(default_factory=list)
    parameters: Dict[str, Any] = Field(default_factory=dict)

    def add(self, status: MatchStatus, **fields) -> VerificationEntry:
        entry = VerificationEntry(status=status, **fields)
        self.entries.append(entry)
        return entry

    def compare(self, expected: Any, computed: Any, **fields) -> VerificationEntry:
        status = MatchStatus.match if expected == computed else MatchStatus.mismatch
        return self.add(status, expected=expected, computed=computed, **fields)

    def extend(self, other: "VerificationOutcome") -> "VerificationOutcome":
        self.entries.extend(other.entries)
        self.summary.extend(other.summary)
        self.parameters.update(other.parameters)
        return self

    def count(self, status: MatchStatus) -> int:
        return sum(1 for e in self.entries if e.status == status)

    @property
    def match_count(self) -> int:
        return self.count(MatchStatus.match)

    @property
    def mismatch_count(self) -> int:
        return self.count(MatchStatus.mismatch)

    @property
    def note_count(self) -> int:
        return self.count(MatchStatus.note)

    @property
    def mismatches(self) -> List[VerificationEntry]:
        return [e for e in self.entries if e.status == MatchStatus.mismatch]

    @property
    def exit_code(self) -> int:
        return 2 if self.mismatch_count else 0
