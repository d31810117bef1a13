# =====================================================================
# FILE: app/algebra/iso.py
# =====================================================================
"""
Isomorphisms of partial magmas, canonical forms and orbit counting.

A permutation φ acts on a table by relabelling: (φ·∇)(φx, φy) = φ(∇(x, y)),
with φ fixing UNDEFINED. Two tables are isomorphic in PM exactly when one is
the image of the other, so classification only needs this action.
"""

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

from app.algebra.partial import (
    UNDEFINED,
    Element,
    PartialMagma,
    PartialMap,
    Value,
    compose,
    value_rank,
)
from app.algebra.predicates import PredicateKind, evaluate
from app.core.config import DEFAULT_LIMITS, EngineLimits
from app.core.exceptions import (
    BudgetExceededError,
    InvalidCodeError,
    NonTotalError,
    OrderMismatchError,
)

Digits = Tuple[int, ...]
# (src, vmap): image[j] = vmap[digits[src[j]]]
DigitAction = Tuple[Tuple[int, ...], Tuple[int, ...]]


@dataclass(frozen=True)
class Permutation:
    order: int
    images: Tuple[Element, ...]

    def __post_init__(self):
        if sorted(self.images) != list(range(1, self.order + 1)):
            raise InvalidCodeError(f"{self.images} is not a permutation of 1..{self.order}")

    @classmethod
    def from_map(cls, f: PartialMap) -> "Permutation":
        if not (f.is_total and f.is_injective_on_domain):
            raise InvalidCodeError(f"{f.code} is not a bijection")
        return cls(f.order, tuple(f.images))

    def __call__(self, x: Value) -> Value:
        if x is UNDEFINED:
            return UNDEFINED
        return self.images[x - 1]

    def inverse(self) -> "Permutation":
        images = [0] * self.order
        for x, y in enumerate(self.images, start=1):
            images[y - 1] = x
        return Permutation(self.order, tuple(images))

    def as_partial_map(self) -> PartialMap:
        return PartialMap(self.order, self.images)

    @property
    def is_identity(self) -> bool:
        return self.images == tuple(range(1, self.order + 1))

    @property
    def code(self) -> str:
        return self.as_partial_map().code

    def __str__(self) -> str:
        return self.code


def identity_permutation(order: int) -> Permutation:
    return Permutation(order, tuple(range(1, order + 1)))


def transposition() -> Permutation:
    """t with t(1)=2, t(2)=1 on the order-2 carrier"""
    return Permutation(2, (2, 1))


def check_iso_order(order: int, limits: EngineLimits) -> None:
    if order > limits.max_iso_order:
        raise BudgetExceededError(
            f"isomorphism search over S_{order} exceeds the order cap {limits.max_iso_order}"
        )


def all_permutations(order: int, limits: EngineLimits = DEFAULT_LIMITS) -> List[Permutation]:
    """S_n in lexicographic order; the identity comes first"""
    check_iso_order(order, limits)
    return [Permutation(order, p) for p in itertools.permutations(range(1, order + 1))]


def _coerce(phi) -> Permutation:
    return phi if isinstance(phi, Permutation) else Permutation.from_map(phi)


def _same_order(m: PartialMagma, other: PartialMagma) -> None:
    if m.order != other.order:
        raise OrderMismatchError(f"carrier orders differ: {m.order} and {other.order}")


# ============================================================
# ACTION ON TABLES
# ============================================================
def relabel(m: PartialMagma, phi: Permutation) -> PartialMagma:
    """The table φ·∇ for which φ is an isomorphism ∇ → φ·∇"""
    phi = _coerce(phi)
    if phi.order != m.order:
        raise OrderMismatchError(f"carrier orders differ: {m.order} and {phi.order}")
    n = m.order
    cells: List[Value] = [UNDEFINED] * (n * n)
    for x in range(1, n + 1):
        for y in range(1, n + 1):
            cells[(phi(x) - 1) * n + phi(y) - 1] = phi(m.product(x, y))
    return PartialMagma(n, tuple(cells))


def conjugate(alpha: PartialMap, phi) -> PartialMap:
    """φ∘α∘φ⁻¹; carries alpha-sets of ∇ onto those of φ·∇"""
    phi = _coerce(phi)
    return compose(phi.as_partial_map(), compose(alpha, phi.inverse().as_partial_map()))


# ============================================================
# ISOMORPHISM PREDICATES
# ============================================================
def is_isomorphism_PM(m: PartialMagma, other: PartialMagma, phi) -> bool:
    _same_order(m, other)
    phi = _coerce(phi)
    return evaluate(m, phi.as_partial_map(), PredicateKind.partial_endo, target=other).holds


def is_isomorphism_M(m: PartialMagma, other: PartialMagma, phi) -> bool:
    if not (m.is_total and other.is_total):
        raise NonTotalError("isomorphisms in M are between total tables")
    return is_isomorphism_PM(m, other, phi)


def is_isomorphism_WPM(m: PartialMagma, other: PartialMagma, phi: PartialMap) -> bool:
    """φ injective on its domain, and α∘∇ = ∇'∘(α×α) as partial functions"""
    _same_order(m, other)
    if not phi.is_injective_on_domain:
        return False
    return evaluate(m, phi, PredicateKind.partial_endo, target=other).holds


def are_isomorphic(
    m: PartialMagma, other: PartialMagma, limits: EngineLimits = DEFAULT_LIMITS
) -> Optional[Permutation]:
    _same_order(m, other)
    for phi in all_permutations(m.order, limits):
        if relabel(m, phi) == other:
            return phi
    return None


def prop_tiso_criterion(m: PartialMagma, other: PartialMagma) -> bool:
    """abcd ≅ efgh iff they are equal or t(a)=h, t(b)=g, t(c)=f, t(d)=e"""
    if m.order != 2 or other.order != 2:
        raise OrderMismatchError("the abcd/efgh criterion is stated for order-2 tables")
    t = transposition()
    if m.cells == other.cells:
        return True
    return tuple(t(v) for v in m.cells) == tuple(reversed(other.cells))


# ============================================================
# ORBITS
# ============================================================
def orbit(m: PartialMagma, limits: EngineLimits = DEFAULT_LIMITS) -> Tuple[PartialMagma, ...]:
    images = {relabel(m, phi) for phi in all_permutations(m.order, limits)}
    return tuple(sorted(images, key=lambda t: t.sort_key))


def canonical_form(m: PartialMagma, limits: EngineLimits = DEFAULT_LIMITS) -> PartialMagma:
    """Lexicographically least table of the orbit, row-major, UNDEFINED after every value"""
    return orbit(m, limits)[0]


def automorphisms(m: PartialMagma, limits: EngineLimits = DEFAULT_LIMITS) -> List[Permutation]:
    return [phi for phi in all_permutations(m.order, limits) if relabel(m, phi) == m]


def burnside_class_count(
    order: int, totals_only: bool = False, limits: EngineLimits = DEFAULT_LIMITS
) -> int:
    """
    Number of PM-isomorphism classes by Burnside's lemma.

    π fixes a table iff T(πx, πy) = π(T(x, y)). Along a cell orbit of length L
    the table is determined by its first value v, which must satisfy π^L(v) = v:
    an element qualifies when its cycle length divides L, UNDEFINED always does.
    """
    check_iso_order(order, limits)
    total = Fraction(0)
    group = list(itertools.permutations(range(order)))
    for p in group:
        cycle_length = _cycle_lengths(p)
        fixed = 1
        for length in _cell_orbit_lengths(p):
            allowed = sum(1 for x in range(order) if length % cycle_length[x] == 0)
            fixed *= allowed if totals_only else allowed + 1
        total += fixed
    count = total / math.factorial(order)
    if count.denominator != 1:
        raise ArithmeticError(f"Burnside average {count} is not an integer")
    return int(count)


def _cycle_lengths(p: Sequence[int]) -> List[int]:
    lengths = [0] * len(p)
    for start in range(len(p)):
        length, x = 1, p[start]
        while x != start:
            x = p[x]
            length += 1
        lengths[start] = length
    return lengths


def _cell_orbit_lengths(p: Sequence[int]) -> List[int]:
    n = len(p)
    seen = [False] * (n * n)
    lengths = []
    for cell in range(n * n):
        if seen[cell]:
            continue
        length, current = 0, cell
        while not seen[current]:
            seen[current] = True
            x, y = divmod(current, n)
            current = p[x] * n + p[y]
            length += 1
        lengths.append(length)
    return lengths


# ============================================================
# DIGIT FORM (enumeration hot path)
# ============================================================
# A table of order n is a tuple of n² digits 0..n: digit d < n is the element
# d + 1 and digit n is UNDEFINED. Tuple order on digits is the canonical order.
def to_digits(m: PartialMagma) -> Digits:
    return tuple(value_rank(v, m.order) for v in m.cells)


def from_digits(digits: Digits, order: int) -> PartialMagma:
    return PartialMagma(order, tuple(UNDEFINED if d == order else d + 1 for d in digits))


def digit_actions(order: int, limits: EngineLimits = DEFAULT_LIMITS) -> List[DigitAction]:
    check_iso_order(order, limits)
    actions = []
    for p in itertools.permutations(range(order)):
        src = [0] * (order * order)
        for x in range(order):
            for y in range(order):
                src[p[x] * order + p[y]] = x * order + y
        vmap = tuple(p) + (order,)
        actions.append((tuple(src), vmap))
    return actions


def canonical_digits(digits: Digits, actions: Sequence[DigitAction]) -> Digits:
    return min(tuple(vmap[digits[s]] for s in src) for src, vmap in actions)
