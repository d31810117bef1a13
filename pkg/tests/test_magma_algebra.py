from fractions import Fraction

import pytest

from app.algebra.magma_algebra import (
    MAGMA_COUNTERPART,
    AlgebraKind,
    HomAlgebraInstance,
    RationalVector,
    evaluate_algebra,
    is_associative_algebra,
    is_hom_associative_algebra,
    is_multiplicative,
    is_partially_b_associative,
    is_partially_b_hom_associative,
    is_partially_b_multiplicative,
    linearity_check,
    mu_apply,
    randomized_bilinear_check,
    tau_apply,
)
from app.algebra.partial import all_partial_maps, decode, decode_map, identity
from app.algebra.predicates import evaluate
from app.core.exceptions import OrderMismatchError
from app.services.algebra_check_service import AlgebraCheckService
from app.services.enumeration_service import EnumerationService


def H(table: str, alpha: str) -> HomAlgebraInstance:
    m = decode(table)
    return HomAlgebraInstance(m, decode_map(alpha, m.order))


def e(x: int, order: int = 2) -> RationalVector:
    return RationalVector.basis(order, x)


def vec(*coefficients) -> RationalVector:
    return RationalVector(len(coefficients), coefficients)


# -------------------------------------------------------------
# VECTORS
# -------------------------------------------------------------
def test_vectors_are_exact_and_normalized():
    v = vec(Fraction(2, 4), -3)
    assert v[1] == Fraction(1, 2)
    assert v.coefficients[1].denominator == 1
    assert str(vec(2, Fraction(3, 2))) == "2e1 + (3/2)e2"
    assert str(vec(1, -1)) == "e1 - e2"
    assert str(RationalVector.zero(3)) == "0"
    assert (e(1) + e(2)).scale(Fraction(1, 3)) == vec(Fraction(1, 3), Fraction(1, 3))
    assert (e(1) - e(1)).is_zero
    with pytest.raises(OrderMismatchError):
        e(1) + e(1, order=3)


# -------------------------------------------------------------
# τ AND μ
# -------------------------------------------------------------
def test_tau():
    h = H("1221", "13")
    assert tau_apply(h, e(1)) == e(1)
    assert tau_apply(h, e(2)).is_zero
    assert tau_apply(H("1221", "33"), vec(5, 7)).is_zero
    assert tau_apply(H("1221", "21"), vec(2, 3)) == vec(3, 2)


def test_mu():
    both = e(1) + e(2)
    assert mu_apply(H("1221", "12"), both, both) == vec(2, 2)
    assert mu_apply(H("3333", "12"), both, both).is_zero
    h = H("2131", "12")
    assert mu_apply(h, e(2), e(1)).is_zero
    assert mu_apply(h, e(1), e(1)) == e(2)


def test_orders_must_agree():
    with pytest.raises(OrderMismatchError):
        HomAlgebraInstance(decode("1221"), decode_map("1,2,3"))
    with pytest.raises(OrderMismatchError):
        tau_apply(H("1221", "12"), e(1, order=3))
    with pytest.raises(OrderMismatchError):
        mu_apply(H("1221", "12"), e(1), e(1, order=3))


# -------------------------------------------------------------
# ALGEBRA PREDICATES
# -------------------------------------------------------------
def test_multiplicativity():
    assert is_multiplicative(H("2232", "12"))
    assert is_partially_b_multiplicative(H("2232", "22"))
    assert not is_multiplicative(H("2232", "22"))
    assert is_multiplicative(H("1221", "11"))


def test_hom_associativity():
    assert is_hom_associative_algebra(H("1221", "21"))
    assert is_partially_b_hom_associative(H("2121", "31"))
    assert not is_partially_b_associative(H("2111", "12"))
    assert not is_associative_algebra(H("2111", "22"))
    assert is_associative_algebra(H("1221", "33"))


def test_failure_carries_basis_witness():
    result = evaluate_algebra(H("2121", "12"), AlgebraKind.hom_assoc)
    assert not result.holds
    assert len(result.witness.point) == 3


@pytest.mark.parametrize("kind", list(AlgebraKind))
def test_algebra_predicates_match_magma_predicates(kind):
    maps = all_partial_maps(2)
    for m in EnumerationService.enumerate_tables(2):
        for alpha in maps:
            h = HomAlgebraInstance(m, alpha)
            assert evaluate_algebra(h, kind).holds == evaluate(m, alpha, MAGMA_COUNTERPART[kind]).holds


def test_equivalence_grid():
    outcome = AlgebraCheckService.cross_check_theorem2(2)
    assert outcome.mismatch_count == 0
    assert outcome.exit_code == 0
    assert outcome.summary[0] == "729/729 equivalences hold"
    assert outcome.parameters["trials"] == 100
    assert {e.item for e in outcome.entries} == {"a", "b", "b'", "c", "c'", "d", "e"}


def test_sampled_equivalences_are_deterministic():
    first = AlgebraCheckService.sample_cases(3, 20, seed=7)
    assert first == AlgebraCheckService.sample_cases(3, 20, seed=7)
    assert all(len(decode(table).cells) == 9 for table, _ in first)
    outcome = AlgebraCheckService.cross_check_theorem2(3, sample=20, seed=7, trials=2)
    assert outcome.mismatch_count == 0
    assert outcome.summary[0] == "20/20 equivalences hold"
    assert outcome.parameters["trials"] == 2


# -------------------------------------------------------------
# RANDOMIZED CHECKS
# -------------------------------------------------------------
@pytest.mark.parametrize(
    "table, alpha, seed",
    [("1221", "12", 0), ("1221", "12", 11), ("3333", "33", 0), ("3333", "33", 5), ("2121", "21", 0)],
)
def test_randomized_check_on_hom_associative_instances(table, alpha, seed):
    assert randomized_bilinear_check(H(table, alpha), trials=100, seed=seed, multiplicative=True)


def test_randomized_check_catches_failures():
    assert not randomized_bilinear_check(H("2121", "12"), trials=20, seed=0)
    assert not randomized_bilinear_check(H("2121", "12"), trials=20, seed=0, associative=True)


def test_randomized_sweep_over_every_hom_associative_instance():
    outcome = AlgebraCheckService.randomized_sweep(2, trials=100, seed=0)
    assert outcome.mismatch_count == 0
    assert outcome.entries[0].computed == outcome.entries[0].expected > 0


def test_linearity():
    for alpha in all_partial_maps(2):
        assert linearity_check(H("2131", alpha.code), trials=10, seed=3) is None
    assert linearity_check(HomAlgebraInstance(decode("1,2,-,3,1,-,2,2,3"), identity(3)), 10, 0) is None
