import pytest

from heckemod.cache import CharpolyCache


@pytest.fixture(scope="session")
def shared_cache():
    """In-memory charpoly cache shared by the whole session.

    Characteristic polynomials are deterministic, so reuse across test
    files only saves time and cannot couple outcomes.
    """
    return CharpolyCache()
