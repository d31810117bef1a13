# =====================================================================
# FILE: app/algebra/partial.py
# =====================================================================
"""
Finite partial maps, partial magmas and pointwise partial functions.

Elements of a carrier of order n are the integers 1..n. A missing value is
the UNDEFINED marker, never a number: the digit "3" for it only exists
inside order-2 code strings.
"""

import enum
import itertools
import math
from dataclasses import dataclass
from typing import Any, Callable, Iterator, List, Optional, Protocol, Tuple, Union

from app.core.exceptions import InvalidCodeError, OrderMismatchError, ShapeMismatchError


class _Undefined(enum.Enum):
    UNDEFINED = "undefined"

    def __repr__(self) -> str:
        return "UNDEFINED"


UNDEFINED = _Undefined.UNDEFINED

Element = int
Value = Union[Element, _Undefined]
Point = Tuple[Element, ...]

ORDER_TWO_UNDEFINED = "3"
GENERAL_UNDEFINED = "-"


def _check_value(value: Value, order: int, where: str) -> None:
    if value is UNDEFINED:
        return
    if isinstance(value, bool) or not isinstance(value, int) or not 1 <= value <= order:
        raise InvalidCodeError(f"{where}: {value!r} is not an element of 1..{order}")


def value_rank(value: Value, order: int) -> int:
    """Sort rank with defined values 1 < 2 < ... < n < UNDEFINED"""
    return order if value is UNDEFINED else value - 1


def points(order: int, arity: int) -> Iterator[Point]:
    return itertools.product(range(1, order + 1), repeat=arity)


# ============================================================
# PARTIAL FUNCTION PROTOCOL
# ============================================================
class PartialFunctionLike(Protocol):
    order: int
    arity: int

    def evaluate(self, point: Point) -> Any:
        ...


@dataclass(frozen=True)
class PointwiseMap:
    """Partial function on X^arity given by a rule; nothing is materialized"""

    order: int
    arity: int
    rule: Callable[..., Any]
    label: str = ""

    def evaluate(self, point: Point) -> Any:
        return self.rule(*point)


def _check_shape(f: PartialFunctionLike, g: PartialFunctionLike) -> None:
    if (f.order, f.arity) != (g.order, g.arity):
        raise ShapeMismatchError(
            f"cannot compare a map on X^{f.arity} (n={f.order}) "
            f"with a map on X^{g.arity} (n={g.order})"
        )


def first_disagreement(
    f: PartialFunctionLike, g: PartialFunctionLike, strict: bool
) -> Optional[Tuple[Point, Any, Any]]:
    """
    First point (row-major) where f and g disagree.

    strict=False only compares points where both are defined (partial equality);
    strict=True also counts a point defined on one side only.
    """
    _check_shape(f, g)
    for point in points(f.order, f.arity):
        left = f.evaluate(point)
        right = g.evaluate(point)
        if left is UNDEFINED or right is UNDEFINED:
            if strict and left is not right:
                return point, left, right
            continue
        if left != right:
            return point, left, right
    return None


def partially_equal(f: PartialFunctionLike, g: PartialFunctionLike) -> bool:
    return first_disagreement(f, g, strict=False) is None


def equal_as_partial_functions(f: PartialFunctionLike, g: PartialFunctionLike) -> bool:
    return first_disagreement(f, g, strict=True) is None


# ============================================================
# PARTIAL MAPS
# ============================================================
@dataclass(frozen=True)
class PartialMap:
    """Partial self-map of {1..n}; images[i] is the image of i + 1"""

    order: int
    images: Tuple[Value, ...]

    arity = 1

    def __post_init__(self):
        if self.order < 1:
            raise InvalidCodeError("order must be positive")
        if len(self.images) != self.order:
            raise InvalidCodeError(
                f"a map of order {self.order} needs {self.order} images, got {len(self.images)}"
            )
        for x, value in enumerate(self.images, start=1):
            _check_value(value, self.order, f"image of {x}")

    @classmethod
    def from_images(cls, images) -> "PartialMap":
        return cls(len(images), tuple(UNDEFINED if v is None else v for v in images))

    def __call__(self, x: Value) -> Value:
        if x is UNDEFINED:
            return UNDEFINED
        return self.images[x - 1]

    def evaluate(self, point: Point) -> Value:
        return self(point[0])

    @property
    def domain(self) -> Tuple[Element, ...]:
        return tuple(x for x, v in enumerate(self.images, start=1) if v is not UNDEFINED)

    @property
    def range(self) -> Tuple[Element, ...]:
        return tuple(sorted({v for v in self.images if v is not UNDEFINED}))

    @property
    def is_total(self) -> bool:
        return UNDEFINED not in self.images

    @property
    def is_injective_on_domain(self) -> bool:
        defined = [v for v in self.images if v is not UNDEFINED]
        return len(defined) == len(set(defined))

    def inverse(self) -> "PartialMap":
        """Inverse relation; only a partial map when injective on the domain"""
        if not self.is_injective_on_domain:
            raise InvalidCodeError(f"{self.code} is not injective on its domain")
        images: List[Value] = [UNDEFINED] * self.order
        for x, v in enumerate(self.images, start=1):
            if v is not UNDEFINED:
                images[v - 1] = x
        return PartialMap(self.order, tuple(images))

    @property
    def sort_key(self) -> Tuple[int, Tuple[int, ...]]:
        # fewer defined points first, then lexicographic with UNDEFINED last
        ranks = tuple(value_rank(v, self.order) for v in self.images)
        return len(self.domain), ranks

    @property
    def code(self) -> str:
        return encode_map(self)

    def __str__(self) -> str:
        return self.code


def identity(order: int) -> PartialMap:
    return PartialMap(order, tuple(range(1, order + 1)))


def empty(order: int) -> PartialMap:
    return PartialMap(order, (UNDEFINED,) * order)


def all_partial_maps(order: int) -> List[PartialMap]:
    values: List[Value] = list(range(1, order + 1)) + [UNDEFINED]
    maps = [PartialMap(order, images) for images in itertools.product(values, repeat=order)]
    return sorted(maps, key=lambda f: f.sort_key)


def sort_maps(maps) -> List[PartialMap]:
    return sorted(set(maps), key=lambda f: f.sort_key)


def _check_orders(*orders: int) -> None:
    if len(set(orders)) != 1:
        raise OrderMismatchError(f"carrier orders differ: {sorted(set(orders))}")


def compose(g: PartialMap, f: PartialMap) -> PartialMap:
    """g after f; defined at x iff f(x) and g(f(x)) are defined"""
    _check_orders(g.order, f.order)
    return PartialMap(f.order, tuple(g(f(x)) for x in range(1, f.order + 1)))


def pair_map(f: PartialMap, h: PartialMap) -> PointwiseMap:
    """f x h on ordered pairs; values are pairs (f(x), h(y))"""
    _check_orders(f.order, h.order)

    def rule(x: Element, y: Element):
        fx, hy = f(x), h(y)
        if fx is UNDEFINED or hy is UNDEFINED:
            return UNDEFINED
        return fx, hy

    return PointwiseMap(f.order, 2, rule, label=f"{f.code}x{h.code}")


# ============================================================
# PARTIAL MAGMAS
# ============================================================
@dataclass(frozen=True)
class PartialMagma:
    """Order-n partial multiplication table, stored row-major"""

    order: int
    cells: Tuple[Value, ...]

    arity = 2

    def __post_init__(self):
        if self.order < 1:
            raise InvalidCodeError("order must be positive")
        if len(self.cells) != self.order * self.order:
            raise InvalidCodeError(
                f"a table of order {self.order} needs {self.order ** 2} cells, got {len(self.cells)}"
            )
        for index, value in enumerate(self.cells):
            x, y = divmod(index, self.order)
            _check_value(value, self.order, f"cell ({x + 1},{y + 1})")

    @classmethod
    def from_rows(cls, rows) -> "PartialMagma":
        order = len(rows)
        cells = tuple(UNDEFINED if v is None else v for row in rows for v in row)
        return cls(order, cells)

    @property
    def rows(self) -> Tuple[Tuple[Value, ...], ...]:
        n = self.order
        return tuple(self.cells[i * n:(i + 1) * n] for i in range(n))

    def product(self, x: Value, y: Value) -> Value:
        if x is UNDEFINED or y is UNDEFINED:
            return UNDEFINED
        return self.cells[(x - 1) * self.order + (y - 1)]

    def evaluate(self, point: Point) -> Value:
        return self.product(*point)

    @property
    def is_total(self) -> bool:
        return UNDEFINED not in self.cells

    @property
    def sort_key(self) -> Tuple[int, ...]:
        return tuple(value_rank(v, self.order) for v in self.cells)

    @property
    def code(self) -> str:
        return encode(self)

    def __str__(self) -> str:
        return self.code


# ============================================================
# CODES
# ============================================================
def _symbol(value: Value, order: int) -> str:
    if value is UNDEFINED:
        return ORDER_TWO_UNDEFINED if order == 2 else GENERAL_UNDEFINED
    return str(value)


def _join(values, order: int) -> str:
    symbols = [_symbol(v, order) for v in values]
    return "".join(symbols) if order == 2 else ",".join(symbols)


def encode(m: PartialMagma) -> str:
    return _join(m.cells, m.order)


def encode_map(f: PartialMap) -> str:
    return _join(f.images, f.order)


def _parse_symbols(symbols: List[str], order: int, text: str) -> Tuple[Value, ...]:
    values: List[Value] = []
    for symbol in symbols:
        symbol = symbol.strip()
        if order == 2 and symbol == ORDER_TWO_UNDEFINED:
            values.append(UNDEFINED)
        elif order != 2 and symbol == GENERAL_UNDEFINED:
            values.append(UNDEFINED)
        elif symbol.isdigit() and 1 <= int(symbol) <= order:
            values.append(int(symbol))
        else:
            raise InvalidCodeError(f"invalid symbol {symbol!r} in code {text!r} (order {order})")
    return tuple(values)


def _split_code(text: str) -> List[str]:
    text = text.strip()
    if not text:
        raise InvalidCodeError("empty code")
    if "," in text:
        return text.split(",")
    if len(text) == 1:
        return [text]
    if text.isdigit():
        return list(text)
    raise InvalidCodeError(f"invalid code {text!r}")


def decode(text: str) -> PartialMagma:
    """Parse a TableCode: "2131" for order 2, "1,-,2,3,1,1,2,-,3" for order >= 3"""
    symbols = _split_code(text)
    order = math.isqrt(len(symbols))
    if order * order != len(symbols):
        raise InvalidCodeError(f"code {text!r} has {len(symbols)} cells, not a square")
    if "," in text and order == 2:
        raise InvalidCodeError(f"order-2 tables use the four-digit form, got {text!r}")
    if "," not in text and order not in (1, 2):
        raise InvalidCodeError(f"tables of order {order} need comma-separated cells")
    return PartialMagma(order, _parse_symbols(symbols, order, text))


def decode_map(text: str, order: Optional[int] = None) -> PartialMap:
    """Parse a partial-map code: "23" for order 2, "1,-,2" for order >= 3"""
    symbols = _split_code(text)
    found = len(symbols)
    if order is not None and found != order:
        raise InvalidCodeError(f"map code {text!r} has {found} images, expected {order}")
    if "," in text and found == 2:
        raise InvalidCodeError(f"order-2 maps use the two-digit form, got {text!r}")
    if "," not in text and found not in (1, 2):
        raise InvalidCodeError(f"maps of order {found} need comma-separated images")
    return PartialMap(found, _parse_symbols(symbols, found, text))
