# =====================================================================
# FILE: app/core/config.py
# =====================================================================

from pydantic import BaseModel, Field


SQLALCHEMY_DATABASE_URL = "sqlite:///./magma_catalog.db"


class EngineLimits(BaseModel):
    """Hard caps on brute-force work; overridable from CLI flags only"""

    # (n+1)^(n^2) partial tables; admits n = 3 (262_144) and rejects n = 4
    max_enumeration_tables: int = Field(300_000, gt=0)
    # isomorphism search walks all of S_n
    max_iso_order: int = Field(6, gt=0)
    # (n+1)^n candidate partial maps per alpha-set
    max_alpha_maps: int = Field(4_096, gt=0)

    default_seed: int = 0
    default_trials: int = Field(100, ge=0)
    default_sample: int = Field(200, ge=0)

    database_url: str = SQLALCHEMY_DATABASE_URL

    def with_overrides(self, **overrides) -> "EngineLimits":
        values = {k: v for k, v in overrides.items() if v is not None}
        return self.model_copy(update=values)


DEFAULT_LIMITS = EngineLimits()
