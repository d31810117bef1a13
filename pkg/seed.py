from app.core.config import DEFAULT_LIMITS
from app.core.database import session_scope
from app.seeds.catalog import seed_catalog


def seed_data():
    print("Seeding catalog...")
    with session_scope(DEFAULT_LIMITS.database_url) as db:
        seed_catalog(db)
    print("Seeding complete.")


if __name__ == "__main__":
    seed_data()
