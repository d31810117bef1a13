from contextlib import contextmanager
from typing import Iterator

from sqlalchemy import create_engine
from sqlalchemy.orm import Session, declarative_base, sessionmaker
from sqlalchemy.pool import StaticPool

from app.core.config import SQLALCHEMY_DATABASE_URL

Base = declarative_base()


def make_engine(url: str = SQLALCHEMY_DATABASE_URL):
    if not url.startswith("sqlite"):
        return create_engine(url)
    if url in ("sqlite://", "sqlite:///:memory:"):
        # one shared connection, otherwise every session sees an empty database
        return create_engine(url, connect_args={"check_same_thread": False}, poolclass=StaticPool)
    return create_engine(url, connect_args={"check_same_thread": False})


def make_session_factory(url: str = SQLALCHEMY_DATABASE_URL, create_tables: bool = True):
    engine = make_engine(url)
    if create_tables:
        # Alembic owns migrations for long-lived catalogs; fresh files get the current schema.
        import app.models  # noqa: F401
        Base.metadata.create_all(bind=engine)
    return sessionmaker(autocommit=False, autoflush=False, bind=engine)


@contextmanager
def session_scope(url: str = SQLALCHEMY_DATABASE_URL) -> Iterator[Session]:
    db = make_session_factory(url)()
    try:
        yield db
    finally:
        db.close()
