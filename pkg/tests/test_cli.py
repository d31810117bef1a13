import csv
import io
import json

import pytest

from app.cli.main import run
from app.schemas.report import VerificationOutcome
from app.services.algebra_check_service import AlgebraCheckService


def invoke(capsys, *argv):
    code = run(list(argv))
    return code, capsys.readouterr().out


# -------------------------------------------------------------
# check
# -------------------------------------------------------------
def test_check_true(capsys):
    assert invoke(capsys, "check", "--table", "1221", "--alpha", "21", "--kind", "hom-assoc") == (0, "true\n")
    assert invoke(capsys, "check", "--table", "3333", "--alpha", "33", "--kind", "hom-assoc") == (0, "true\n")


def test_check_false_prints_witness(capsys):
    code, out = invoke(capsys, "check", "--table", "1221", "--alpha", "21", "--kind", "partial-endo")
    assert code == 0
    assert out == "false\nwitness: at (1,1): left=2 right=1\n"


def test_check_map_free_kinds(capsys):
    assert invoke(capsys, "check", "--table", "1221", "--kind", "assoc") == (0, "true\n")
    code, out = invoke(capsys, "check", "--table", "2121", "--kind", "partial-assoc")
    assert code == 0 and out.startswith("false\nwitness: ")


def test_check_with_target(capsys):
    argv = ["check", "--table", "1333", "--alpha", "21", "--kind", "partial-endo", "--target", "3332"]
    assert invoke(capsys, *argv) == (0, "true\n")


def test_check_endo_reason(capsys):
    code, out = invoke(capsys, "check", "--table", "2131", "--alpha", "12", "--kind", "endo")
    assert code == 0
    assert out.startswith("false\nreason: ")


@pytest.mark.parametrize(
    "argv",
    [
        ["check", "--table", "12x1", "--alpha", "21", "--kind", "hom-assoc"],
        ["check", "--table", "1221", "--kind", "hom-assoc"],
        ["check", "--table", "1221", "--alpha", "1,2,3", "--kind", "hom-assoc"],
        ["check", "--table", "1221", "--alpha", "21", "--kind", "commutative"],
        ["check", "--table", "1221", "--alpha", "21", "--kind", "hom-assoc", "--target", "1221"],
        ["check", "--table", "1221", "--kind", "assoc", "--target", "2112"],
        ["classify", "--order", "4"],
        ["report"],
        ["no-such-command"],
    ],
)
def test_errors_exit_with_one(capsys, argv):
    code, out = invoke(capsys, *argv)
    assert code == 1
    assert out == ""


# -------------------------------------------------------------
# enumerate / classify
# -------------------------------------------------------------
def test_enumerate(capsys):
    assert invoke(capsys, "enumerate", "--order", "2", "--count-only") == (0, "81\n")
    assert invoke(capsys, "enumerate", "--order", "2", "--totals-only", "--count-only") == (0, "16\n")
    code, out = invoke(capsys, "enumerate", "--order", "2", "--totals-only")
    assert code == 0
    assert out.splitlines()[:2] == ["1111", "1112"]
    assert len(out.splitlines()) == 16


def test_classify_formats(capsys):
    code, out = invoke(capsys, "classify", "--order", "2", "--format", "csv")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "item,rep,members,wpe,pe,pha,ha,passoc,assoc"
    assert len(lines) == 46
    assert lines[-2].startswith("44,2121,2121,")

    code, out = invoke(capsys, "classify", "--order", "2", "--totals-only", "--format", "csv")
    assert len(out.splitlines()) == 11

    code, out = invoke(capsys, "classify", "--order", "2")
    report = json.loads(out)
    assert report["class_count"] == 45
    assert report["classes"][0]["rep"] == "3333"

    code, out = invoke(capsys, "classify", "--order", "2", "--format", "markdown")
    assert "| (1) | 3333 | 3333 | Pfun(X,X) |" in out
    assert "| (43) | 1221 | 1221 ≅ 2112 |" in out
    assert "| (27) | 2223 |" in out


def test_classify_count_only(capsys):
    assert invoke(capsys, "classify", "--order", "2", "--count-only") == (0, "45 classes (Burnside count 45)\n")


def test_classify_output_is_independent_of_jobs(capsys, tmp_path):
    single, parallel = tmp_path / "one.csv", tmp_path / "three.csv"
    assert invoke(capsys, "classify", "--order", "2", "--format", "csv", "--output", str(single))[0] == 0
    assert invoke(capsys, "classify", "--order", "2", "--format", "csv", "--jobs", "3", "--output", str(parallel))[0] == 0
    assert single.read_bytes() == parallel.read_bytes()
    assert capsys.readouterr().out == ""


def test_order_three_without_alpha_sets(capsys):
    code, out = invoke(capsys, "classify", "--order", "3", "--totals-only", "--format", "csv")
    assert code == 0
    first = list(csv.reader(io.StringIO(out)))[1]
    assert first[1] == "1,1,1,1,1,1,1,1,1"
    assert first[3:7] == ["", "", "", ""]


# -------------------------------------------------------------
# verification
# -------------------------------------------------------------
def test_verify_paper_reports_mismatches(capsys):
    code, out = invoke(capsys, "verify-paper")
    assert code == 2
    assert sum(1 for line in out.splitlines() if line.startswith("MISMATCH ")) == 8
    assert "729/729 equivalences hold" in out
    assert out.rstrip().endswith("8 mismatch, 2 note")


def test_algebra_check(capsys):
    code, out = invoke(capsys, "algebra-check", "--order", "2", "--trials", "10")
    assert code == 0
    assert "729/729 equivalences hold" in out
    assert "MISMATCH" not in out


def test_trials_reach_the_equivalence_check(capsys, monkeypatch):
    seen = []

    def fake(order, **kwargs):
        seen.append(kwargs["trials"])
        return VerificationOutcome(name="algebra")

    monkeypatch.setattr(AlgebraCheckService, "cross_check_theorem2", fake)
    assert invoke(capsys, "algebra-check", "--order", "2", "--sample", "3", "--trials", "7")[0] == 0
    invoke(capsys, "verify-paper")
    invoke(capsys, "verify-paper", "--trials", "3")
    assert seen == [7, 100, 3]


def test_store_and_report(capsys, tmp_path):
    database = f"sqlite:///{tmp_path / 'catalog.db'}"
    assert invoke(capsys, "classify", "--order", "2", "--store", "--database", database)[0] == 0

    code, out = invoke(capsys, "report", "--list", "--database", database)
    assert code == 0
    assert out.splitlines()[1] == "1\t2\tfalse\ttrue\t81\t45"

    code, out = invoke(capsys, "report", "--run-id", "1", "--format", "csv", "--database", database)
    assert code == 0
    assert len(out.splitlines()) == 46

    assert invoke(capsys, "report", "--run-id", "9", "--database", database)[0] == 1

    code, _ = invoke(capsys, "algebra-check", "--order", "2", "--sample", "10", "--store", "--database", database)
    assert code == 0
