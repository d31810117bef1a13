# =====================================================================
# FILE: app/services/report_renderer.py
# =====================================================================

from typing import Any, List, Optional
import csv
import enum
import io
import json

from app.algebra.partial import all_partial_maps
from app.core.exceptions import UsageError
from app.models.catalog import ClassificationRun
from app.schemas.report import ClassificationReport, MatchStatus, VerificationOutcome

CSV_FIELDS = ["item", "rep", "members", "wpe", "pe", "pha", "ha", "passoc", "assoc"]
ALPHA_FIELDS = ["wpe", "pe", "pha", "ha"]


class OutputFormat(str, enum.Enum):
    json = "json"
    csv = "csv"
    markdown = "markdown"


def _show(value: Any) -> str:
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, list):
        return "{" + ", ".join(str(v) for v in value) + "}"
    return str(value)


class ReportRenderer:
    """Text renderings of reports and outcomes; output bytes depend on the data only"""

    # ============================================================
    # CLASSIFICATION REPORTS
    # ============================================================
    @staticmethod
    def render(report: ClassificationReport, fmt: OutputFormat) -> str:
        fmt = OutputFormat(fmt)
        if fmt == OutputFormat.json:
            return ReportRenderer.to_json(report)
        if fmt == OutputFormat.csv:
            return ReportRenderer.to_csv(report)
        if fmt == OutputFormat.markdown:
            return ReportRenderer.to_markdown(report)
        raise UsageError(f"unknown format {fmt}")

    @staticmethod
    def to_json(report: ClassificationReport) -> str:
        return json.dumps(report.model_dump(), indent=2, ensure_ascii=False) + "\n"

    @staticmethod
    def to_csv(report: ClassificationReport) -> str:
        buffer = io.StringIO()
        writer = csv.DictWriter(buffer, fieldnames=CSV_FIELDS, lineterminator="\n")
        writer.writeheader()
        for record in report.classes:
            row = record.model_dump()
            for key in ["members", *ALPHA_FIELDS]:
                row[key] = " ".join(row[key]) if row[key] is not None else ""
            for key in ("passoc", "assoc"):
                row[key] = _show(row[key])
            writer.writerow(row)
        return buffer.getvalue()

    @staticmethod
    def to_markdown(report: ClassificationReport) -> str:
        """One row per class laid out like the printed tables; the full set prints as Pfun(X,X)"""
        everything = [f.code for f in all_partial_maps(report.order)] if report.order <= 3 else None

        def alpha(codes: Optional[List[str]]) -> str:
            if codes is None:
                return ""
            return "Pfun(X,X)" if codes == everything else _show(codes)

        lines = [
            f"Order {report.order}: {report.class_count} classes over {report.table_count} tables"
            + (" (total tables only)" if report.totals_only else ""),
            "",
            "| Item | Representative | Members | wpe | pe | pha | ha | passoc | assoc |",
            "|---:|---|---|---|---|---|---|---|---|",
        ]
        for r in report.classes:
            cells = [
                f"({r.item})", r.rep, " ≅ ".join(r.members),
                alpha(r.wpe), alpha(r.pe), alpha(r.pha), alpha(r.ha),
                _show(r.passoc), _show(r.assoc),
            ]
            lines.append("| " + " | ".join(cells) + " |")
        return "\n".join(lines) + "\n"

    # ============================================================
    # VERIFICATION OUTCOMES
    # ============================================================
    @staticmethod
    def render_outcome(outcome: VerificationOutcome) -> str:
        lines = []
        for e in outcome.entries:
            label = " ".join(part for part in (e.section, f"({e.item})" if e.item else "", e.subject, e.check) if part)
            lines.append(f"{e.status.value:<8} {label}")
            if e.status != MatchStatus.match:
                lines.append(f"         expected: {_show(e.expected)}")
                lines.append(f"         computed: {_show(e.computed)}")
            if e.witness:
                lines.append(f"         witness:  {e.witness}")
        lines.extend(outcome.summary)
        lines.append(
            f"{outcome.name}: {outcome.match_count} match, {outcome.mismatch_count} mismatch, "
            f"{outcome.note_count} note"
        )
        return "\n".join(lines) + "\n"

    @staticmethod
    def render_runs(runs: List[ClassificationRun]) -> str:
        lines = ["id\torder\ttotals_only\talpha_sets\ttables\tclasses"]
        for run in runs:
            lines.append(
                f"{run.id}\t{run.order}\t{_show(run.totals_only)}\t{_show(run.with_alpha_sets)}"
                f"\t{run.table_count}\t{run.class_count}"
            )
        return "\n".join(lines) + "\n"
