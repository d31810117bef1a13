from typing import List

from pydantic import BaseModel, field_validator, model_validator

from app.algebra.partial import all_partial_maps

# Shorthand used in the printed tables for "every partial map of X"
ALL_MAPS = "Pfun"
FIXTURE_ORDER = 2


def _expand(value):
    if value == ALL_MAPS:
        return [f.code for f in all_partial_maps(FIXTURE_ORDER)]
    return value


class FixtureClass(BaseModel):
    """One printed isomorphism class with its four alpha-sets"""
    item: int
    members: List[str]
    wpe: List[str]
    pe: List[str]
    pha: List[str]
    ha: List[str]

    @field_validator("wpe", "pe", "pha", "ha", mode="before")
    @classmethod
    def expand_all_maps(cls, value):
        return _expand(value)

    @property
    def first(self) -> str:
        return self.members[0]


class AssociativityClaim(BaseModel):
    stated_count: int
    listed: str
    items: List[int]


class FixtureExample(BaseModel):
    label: str
    table: str
    item: int
    partially_multiplicative: List[str]
    multiplicative: List[str]
    partially_hom_associative: List[str]
    hom_associative: List[str]
    multiplicative_hom_associative: List[str]
    partially_associative: bool
    associative: bool

    @field_validator(
        "partially_multiplicative",
        "multiplicative",
        "partially_hom_associative",
        "hom_associative",
        "multiplicative_hom_associative",
        mode="before",
    )
    @classmethod
    def expand_all_maps(cls, value):
        return _expand(value)


class PaperFixture(BaseModel):
    version: str
    order: int
    source: str
    classes: List[FixtureClass]
    partially_associative: AssociativityClaim
    associative: AssociativityClaim
    examples: List[FixtureExample]

    @model_validator(mode="after")
    def check_items(self):
        items = [c.item for c in self.classes]
        if items != list(range(1, len(items) + 1)):
            raise ValueError("fixture classes must be numbered 1..N in order")
        if self.order != FIXTURE_ORDER:
            raise ValueError(f"fixture data is stated for order {FIXTURE_ORDER}")
        return self

    def by_item(self, item: int) -> FixtureClass:
        return self.classes[item - 1]
