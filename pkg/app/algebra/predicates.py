# =====================================================================
# FILE: app/algebra/predicates.py
# =====================================================================
"""
Structural predicates of a partial magma (X, ∇) and a partial map α.

Every predicate compares two pointwise partial functions:

    endomorphisms      α∘∇            vs  ∇'∘(α×α)          on X²
    Hom-associativity  ∇∘(α×∇)        vs  ∇∘(∇×α)           on X³

either with partial equality (weak / partial variants) or as partial
functions (full variants).
"""

import enum
from dataclasses import dataclass
from typing import Any, Dict, List, Optional, Tuple

from app.algebra.partial import (
    UNDEFINED,
    PartialMagma,
    PartialMap,
    Point,
    PointwiseMap,
    all_partial_maps,
    first_disagreement,
    identity,
    sort_maps,
)
from app.core.config import DEFAULT_LIMITS, EngineLimits
from app.core.exceptions import BudgetExceededError, OrderMismatchError


class PredicateKind(str, enum.Enum):
    weak_partial_endo = "weak-partial-endo"
    partial_endo = "partial-endo"
    endo = "endo"
    partial_hom_assoc = "partial-hom-assoc"
    hom_assoc = "hom-assoc"
    partial_assoc = "partial-assoc"
    assoc = "assoc"


# The four alpha-set tables, keyed by their report field names
ALPHA_SET_KINDS: Dict[str, PredicateKind] = {
    "wpe": PredicateKind.weak_partial_endo,
    "pe": PredicateKind.partial_endo,
    "pha": PredicateKind.partial_hom_assoc,
    "ha": PredicateKind.hom_assoc,
}


@dataclass(frozen=True)
class Witness:
    point: Point
    left: Any
    right: Any

    def describe(self) -> str:
        def show(v):
            return "undefined" if v is UNDEFINED else str(v)

        coords = ",".join(str(c) for c in self.point)
        return f"at ({coords}): left={show(self.left)} right={show(self.right)}"


@dataclass(frozen=True)
class PredicateResult:
    holds: bool
    witness: Optional[Witness] = None
    reason: Optional[str] = None

    def __bool__(self) -> bool:
        return self.holds


# ============================================================
# POINTWISE SIDES
# ============================================================
def endomorphism_sides(
    m: PartialMagma, alpha: PartialMap, target: Optional[PartialMagma] = None
) -> Tuple[PointwiseMap, PointwiseMap]:
    """α∘∇ and ∇'∘(α×α) as partial maps on X²"""
    target = m if target is None else target
    _check_orders(m, alpha, target)
    left = PointwiseMap(m.order, 2, lambda x, y: alpha(m.product(x, y)), "α∘∇")
    right = PointwiseMap(m.order, 2, lambda x, y: target.product(alpha(x), alpha(y)), "∇'∘(α×α)")
    return left, right


def hom_associativity_sides(m: PartialMagma, alpha: PartialMap) -> Tuple[PointwiseMap, PointwiseMap]:
    """L(x,y,z) = ∇(α(x), ∇(y,z)) and R(x,y,z) = ∇(∇(x,y), α(z)) on X³"""
    _check_orders(m, alpha)
    left = PointwiseMap(m.order, 3, lambda x, y, z: m.product(alpha(x), m.product(y, z)), "∇∘(α×∇)")
    right = PointwiseMap(m.order, 3, lambda x, y, z: m.product(m.product(x, y), alpha(z)), "∇∘(∇×α)")
    return left, right


def _check_orders(m: PartialMagma, alpha: PartialMap, target: Optional[PartialMagma] = None) -> None:
    orders = {m.order, alpha.order} | ({target.order} if target is not None else set())
    if len(orders) != 1:
        raise OrderMismatchError(f"carrier orders differ: {sorted(orders)}")


def _compare(left: PointwiseMap, right: PointwiseMap, strict: bool) -> PredicateResult:
    found = first_disagreement(left, right, strict=strict)
    if found is None:
        return PredicateResult(True)
    return PredicateResult(False, Witness(*found))


# ============================================================
# PREDICATES
# ============================================================
def evaluate(
    m: PartialMagma,
    alpha: Optional[PartialMap],
    kind: PredicateKind,
    target: Optional[PartialMagma] = None,
) -> PredicateResult:
    kind = PredicateKind(kind)

    if kind in (PredicateKind.partial_assoc, PredicateKind.assoc):
        alpha = identity(m.order)
        kind = PredicateKind.partial_hom_assoc if kind == PredicateKind.partial_assoc else PredicateKind.hom_assoc

    if alpha is None:
        raise OrderMismatchError(f"{kind.value} needs a partial map")

    if kind == PredicateKind.weak_partial_endo:
        return _compare(*endomorphism_sides(m, alpha, target), strict=False)
    if kind == PredicateKind.partial_endo:
        return _compare(*endomorphism_sides(m, alpha, target), strict=True)
    if kind == PredicateKind.endo:
        target = m if target is None else target
        if not (m.is_total and target.is_total):
            return PredicateResult(False, reason="homomorphisms of magmas need total tables")
        if not alpha.is_total:
            return PredicateResult(False, reason=f"{alpha.code} is not a function")
        return _compare(*endomorphism_sides(m, alpha, target), strict=True)
    if kind == PredicateKind.partial_hom_assoc:
        return _compare(*hom_associativity_sides(m, alpha), strict=False)
    return _compare(*hom_associativity_sides(m, alpha), strict=True)


def is_weak_partial_endomorphism(m, alpha, target=None) -> bool:
    return evaluate(m, alpha, PredicateKind.weak_partial_endo, target).holds


def is_partial_endomorphism(m, alpha, target=None) -> bool:
    return evaluate(m, alpha, PredicateKind.partial_endo, target).holds


def is_endomorphism(m, alpha, target=None) -> bool:
    return evaluate(m, alpha, PredicateKind.endo, target).holds


def is_partially_hom_associative(m, alpha) -> bool:
    return evaluate(m, alpha, PredicateKind.partial_hom_assoc).holds


def is_hom_associative(m, alpha) -> bool:
    return evaluate(m, alpha, PredicateKind.hom_assoc).holds


def is_partially_associative(m) -> bool:
    return evaluate(m, None, PredicateKind.partial_assoc).holds


def is_associative(m) -> bool:
    return evaluate(m, None, PredicateKind.assoc).holds


# ============================================================
# ALPHA SETS
# ============================================================
def candidate_maps(order: int, limits: EngineLimits = DEFAULT_LIMITS) -> List[PartialMap]:
    count = (order + 1) ** order
    if count > limits.max_alpha_maps:
        raise BudgetExceededError(
            f"order {order} has {count} partial maps, over the cap of {limits.max_alpha_maps}"
        )
    return all_partial_maps(order)


def alpha_set(
    m: PartialMagma, kind: PredicateKind, limits: EngineLimits = DEFAULT_LIMITS
) -> List[PartialMap]:
    """All α satisfying the predicate, in canonical order (33, 13, 23, 31, ... for n = 2)"""
    return sort_maps(a for a in candidate_maps(m.order, limits) if evaluate(m, a, kind).holds)
