import json
import logging
from functools import lru_cache
from pathlib import Path
from typing import Optional

from pydantic import ValidationError

from app.core.exceptions import MagmaError
from app.schemas.fixture import PaperFixture

logger = logging.getLogger(__name__)

FIXTURE_PATH = Path(__file__).parent / "data" / "paper_fixture.json"


def _read(path: Path) -> PaperFixture:
    try:
        raw = json.loads(path.read_text(encoding="utf-8"))
        fixture = PaperFixture.model_validate(raw)
    except (OSError, json.JSONDecodeError, ValidationError) as exc:
        raise MagmaError(f"cannot load fixture {path}: {exc}")
    logger.debug("Loaded fixture %s version %s (%d classes)", path.name, fixture.version, len(fixture.classes))
    return fixture


@lru_cache(maxsize=None)
def _default_fixture() -> PaperFixture:
    return _read(FIXTURE_PATH)


def load_paper_fixture(path: Optional[Path] = None) -> PaperFixture:
    """Printed order-2 tables: class pairings, alpha-sets, associativity claims and examples"""
    if path is None:
        return _default_fixture()
    return _read(Path(path))
