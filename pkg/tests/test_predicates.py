import pytest

from app.algebra.partial import all_partial_maps, decode, decode_map, identity
from app.algebra.predicates import (
    PredicateKind,
    alpha_set,
    candidate_maps,
    evaluate,
    is_associative,
    is_endomorphism,
    is_hom_associative,
    is_partial_endomorphism,
    is_partially_associative,
    is_partially_hom_associative,
    is_weak_partial_endomorphism,
)
from app.core.config import EngineLimits
from app.core.exceptions import BudgetExceededError, OrderMismatchError
from app.services.enumeration_service import EnumerationService

m = decode
a = decode_map
ALL_MAPS = [f.code for f in all_partial_maps(2)]


def grid():
    for table in EnumerationService.enumerate_tables(2):
        for alpha in all_partial_maps(2):
            yield table, alpha


def test_weak_partial_endomorphism():
    assert not is_weak_partial_endomorphism(m("1221"), a("21"))
    assert is_weak_partial_endomorphism(m("2232"), a("22"))
    assert all(is_weak_partial_endomorphism(m("3333"), alpha) for alpha in all_partial_maps(2))


def test_partial_endomorphism():
    assert is_partial_endomorphism(m("1221"), a("11"))
    assert not is_partial_endomorphism(m("1221"), a("21"))


def test_identity_is_an_endomorphism_of_every_total_table():
    for table in EnumerationService.enumerate_tables(2, totals_only=True):
        assert is_endomorphism(table, identity(2))


def test_endomorphism_needs_total_data():
    result = evaluate(m("2131"), identity(2), PredicateKind.endo)
    assert not result.holds
    assert "total" in result.reason

    result = evaluate(m("1221"), a("13"), PredicateKind.endo)
    assert not result.holds
    assert result.reason == "13 is not a function"


def test_hom_associative():
    assert is_hom_associative(m("1221"), a("21"))
    assert not is_hom_associative(m("2121"), a("12"))
    assert is_hom_associative(m("3333"), a("33"))


def test_partially_hom_associative():
    assert is_partially_hom_associative(m("2121"), a("23"))
    assert not is_partially_hom_associative(m("2121"), a("12"))
    assert is_partially_hom_associative(m("1233"), a("22"))


def test_associativity():
    assert is_associative(m("1221"))
    assert not is_partially_associative(m("2121"))
    assert is_partially_associative(m("3333"))
    assert is_associative(m("3333"))


def test_failure_reports_first_witness():
    result = evaluate(m("1221"), a("21"), PredicateKind.partial_endo)
    assert not result
    assert result.witness.point == (1, 1)
    assert result.witness.describe() == "at (1,1): left=2 right=1"


def test_undefined_side_is_named_in_witness():
    # 3133: 1(22) is undefined while (12)2 = 1
    assert is_partially_associative(m("3133"))
    result = evaluate(m("3133"), None, PredicateKind.assoc)
    assert not result.holds
    assert result.witness.describe() == "at (1,2,2): left=undefined right=1"


def test_missing_map_and_mixed_orders():
    with pytest.raises(OrderMismatchError):
        evaluate(m("1221"), None, PredicateKind.hom_assoc)
    with pytest.raises(OrderMismatchError):
        evaluate(m("1221"), a("1,2,3"), PredicateKind.hom_assoc)
    with pytest.raises(OrderMismatchError):
        evaluate(m("1221"), a("12"), PredicateKind.partial_endo, target=m("1,2,3,1,2,3,1,2,3"))


def test_full_variants_imply_partial_variants():
    for table, alpha in grid():
        if is_partial_endomorphism(table, alpha):
            assert is_weak_partial_endomorphism(table, alpha)
        if is_hom_associative(table, alpha):
            assert is_partially_hom_associative(table, alpha)
        if is_endomorphism(table, alpha):
            assert is_partial_endomorphism(table, alpha)


def test_endomorphism_variants_agree_on_total_data():
    tables = list(EnumerationService.enumerate_tables(2, totals_only=True))
    maps = [alpha for alpha in all_partial_maps(2) if alpha.is_total]
    assert len(tables) == 16 and len(maps) == 4
    for table in tables:
        for alpha in maps:
            wpe = is_weak_partial_endomorphism(table, alpha)
            assert wpe == is_partial_endomorphism(table, alpha) == is_endomorphism(table, alpha), (table.code, alpha.code)


def test_associativity_is_hom_associativity_with_identity():
    for table in EnumerationService.enumerate_tables(2):
        assert is_associative(table) == is_hom_associative(table, identity(2))
        assert is_partially_associative(table) == is_partially_hom_associative(table, identity(2))


@pytest.mark.parametrize(
    "table, kind, expected",
    [
        ("1221", PredicateKind.hom_assoc, ["33", "12", "21"]),
        ("1111", PredicateKind.hom_assoc, ["33", "11", "12", "21", "22"]),
        ("2133", PredicateKind.partial_endo, ["33", "12"]),
        ("1331", PredicateKind.weak_partial_endo, ["33", "13", "31", "32", "11", "12"]),
        ("2211", PredicateKind.hom_assoc, ["33", "21"]),
    ],
)
def test_alpha_sets(table, kind, expected):
    assert [f.code for f in alpha_set(m(table), kind)] == expected


def test_empty_table_admits_every_map():
    for kind in PredicateKind:
        if kind == PredicateKind.endo:
            continue
        assert [f.code for f in alpha_set(m("3333"), kind)] == ALL_MAPS


def test_candidate_maps_respect_the_cap():
    assert len(candidate_maps(3)) == 64
    with pytest.raises(BudgetExceededError):
        candidate_maps(2, EngineLimits(max_alpha_maps=8))


def test_magma_endomorphisms_need_a_total_table():
    assert alpha_set(m("3333"), PredicateKind.endo) == []
    assert [f.code for f in alpha_set(m("1221"), PredicateKind.endo)] == ["11", "12"]
