import pytest

from app.core.config import EngineLimits
from app.core.database import make_session_factory
from app.seeds.paper_fixture import load_paper_fixture
from app.services.enumeration_service import EnumerationService


@pytest.fixture
def db():
    session = make_session_factory("sqlite://")()
    try:
        yield session
    finally:
        session.close()


@pytest.fixture
def limits():
    return EngineLimits(database_url="sqlite://")


@pytest.fixture(scope="session")
def paper_fixture():
    return load_paper_fixture()


@pytest.fixture(scope="session")
def order_two_report():
    return EnumerationService.classify(2)


@pytest.fixture(scope="session")
def order_two_totals():
    return EnumerationService.classify(2, totals_only=True)
