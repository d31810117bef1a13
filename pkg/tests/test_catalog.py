import pytest

from app.core.exceptions import CatalogError
from app.models.catalog import ClassificationRun, VerificationKind, VerificationStatus
from app.schemas.report import MatchStatus, VerificationOutcome
from app.seeds.catalog import seed_catalog
from app.services.catalog_service import CatalogService


def test_report_round_trip(db, order_two_report):
    run = CatalogService.save_report(db, order_two_report)
    assert run.class_count == 45
    assert run.with_alpha_sets is True
    assert len(run.classes) == 45

    loaded = CatalogService.load_report(db, run.id)
    assert loaded.model_dump() == order_two_report.model_dump()
    assert loaded.find("1221").ha == ["33", "12", "21"]


def test_missing_run(db):
    with pytest.raises(CatalogError):
        CatalogService.get_run(db, 42)


def test_find_and_list_runs(db, order_two_report, order_two_totals):
    first = CatalogService.save_report(db, order_two_report)
    totals = CatalogService.save_report(db, order_two_totals)
    second = CatalogService.save_report(db, order_two_report)

    assert CatalogService.find_run(db, 2).id == second.id
    assert CatalogService.find_run(db, 2, totals_only=True).id == totals.id
    assert CatalogService.find_run(db, 3) is None
    assert [r.id for r in CatalogService.list_runs(db)] == [first.id, totals.id, second.id]
    assert CatalogService.list_runs(db, order=3) == []


def test_verification_run(db):
    outcome = VerificationOutcome(name="paper")
    outcome.compare(37, 36, section="alpha-sets", subject="partially associative classes", check="stated count")
    outcome.add(MatchStatus.note, section="classes", item="33", subject="2132", check="representative")
    outcome.summary.append("computed 36")

    run = CatalogService.save_verification(db, outcome, VerificationKind.paper, seed=3)
    assert run.status == VerificationStatus.mismatch
    assert (run.match_count, run.mismatch_count, run.note_count) == (0, 1, 1)
    assert run.entries[0]["status"] == "MISMATCH"
    assert run.summary == ["computed 36"]
    assert run.seed == 3


def test_seed_catalog_is_idempotent(db, capsys):
    seed_catalog(db)
    seed_catalog(db)
    runs = db.query(ClassificationRun).all()
    assert sorted((r.order, r.totals_only, r.class_count) for r in runs) == [(2, False, 45), (2, True, 10)]
    assert "already stored" in capsys.readouterr().out
