import pytest
from pydantic import ValidationError

from app.algebra.partial import decode
from app.schemas.fixture import PaperFixture
from app.schemas.report import ClassificationReport, MatchStatus
from app.core.exceptions import MagmaError, OrderMismatchError
from app.seeds.paper_fixture import load_paper_fixture
from app.services.enumeration_service import EnumerationService
from app.services.paper_verification_service import (
    PaperVerificationService,
    format_items,
    normalize_codes,
)

EXAMPLE_E_CHECKS = {
    "partially_multiplicative",
    "multiplicative",
    "partially_hom_associative",
    "hom_associative",
    "multiplicative_hom_associative",
}


@pytest.fixture(scope="module")
def outcome(order_two_report, paper_fixture):
    return PaperVerificationService.verify_against_paper(order_two_report, paper_fixture)


def test_fixture_shape(paper_fixture):
    assert len(paper_fixture.classes) == 45
    assert [e.table for e in paper_fixture.examples] == ["2232", "2111", "1221", "2121", "2211"]
    assert len(paper_fixture.by_item(1).wpe) == 9
    assert paper_fixture.by_item(13).members == ["2323", "3131"]


def test_fixture_numbering_is_validated(paper_fixture):
    raw = paper_fixture.model_dump()
    raw["classes"] = raw["classes"][1:]
    with pytest.raises(ValidationError):
        PaperFixture.model_validate(raw)


def test_unreadable_fixture(tmp_path):
    broken = tmp_path / "fixture.json"
    broken.write_text("{not json", encoding="utf-8")
    with pytest.raises(MagmaError):
        load_paper_fixture(broken)


def test_exactly_eight_disagreements(outcome):
    found = {(e.section, e.item, e.subject, e.check) for e in outcome.mismatches}
    expected = {
        ("alpha-sets", "27", "2223", "wpe"),
        ("alpha-sets", None, "partially associative classes", "stated count"),
        ("alpha-sets", None, "associative classes", "stated count"),
    } | {("algebra examples", "e", "2211", check) for check in EXAMPLE_E_CHECKS}
    assert found == expected
    assert outcome.mismatch_count == 8
    assert outcome.exit_code == 2


def test_class_pairings_all_match(outcome):
    members = [e for e in outcome.entries if e.section == "classes" and e.check == "members"]
    assert len(members) == 45
    assert all(e.status == MatchStatus.match for e in members)


def test_representative_notes(outcome):
    notes = {e.item: (e.expected, e.computed) for e in outcome.entries if e.status == MatchStatus.note}
    assert notes == {"33": ("2132", "1321"), "35": ("2232", "1311")}


def test_item_27_witness(outcome):
    entry = next(e for e in outcome.mismatches if e.item == "27")
    assert "21" in entry.expected and "21" not in entry.computed
    assert entry.witness == "21 fails at (1,2): left=1 right=2"


def test_stated_counts_are_reported_not_reconciled(outcome):
    counts = {e.subject: (e.expected, e.computed) for e in outcome.mismatches if e.check == "stated count"}
    assert counts == {"partially associative classes": (37, 36), "associative classes": (13, 12)}
    listed = [e for e in outcome.entries if e.check == "listed items"]
    assert all(e.status == MatchStatus.match for e in listed)
    assert any("(1)-(24), (27)-(30), (32)-(33), (35)-(37), (41)-(43)" in line for line in outcome.summary)


def test_representatives_are_conjugation_checked(outcome):
    conjugations = [e for e in outcome.entries if "conjugation" in e.check]
    assert {e.item for e in conjugations} == {"33", "35"}
    assert all(e.status == MatchStatus.match for e in conjugations)


def test_example_hom_associative_set(outcome):
    entry = next(
        e for e in outcome.entries
        if e.section == "algebra examples" and e.item == "e" and e.check == "hom_associative"
    )
    assert entry.expected == ["33", "22"]
    assert entry.computed == ["33", "21"]


@pytest.mark.parametrize(
    "table, name, expected",
    [
        ("2133", "pe", ["33", "12"]),
        ("1331", "wpe", ["33", "13", "31", "32", "11", "12"]),
        ("2211", "ha", ["33", "21"]),
    ],
)
def test_printed_items(table, name, expected):
    assert EnumerationService.class_fields(decode(table))[name] == expected


def test_examples_a_to_d_verify(outcome):
    for entry in outcome.entries:
        if entry.section == "algebra examples" and entry.item != "e":
            assert entry.status == MatchStatus.match, entry


def test_order_must_be_two(paper_fixture):
    report = ClassificationReport(order=3, table_count=0, class_count=0)
    with pytest.raises(OrderMismatchError):
        PaperVerificationService.verify_against_paper(report, paper_fixture)


def test_helpers():
    assert format_items([1, 2, 3, 7]) == "(1)-(3), (7)"
    assert format_items([5, 6]) == "(5)-(6)"
    assert format_items([]) == ""
    assert normalize_codes(["21", "33", "12", "21"]) == ["33", "12", "21"]
