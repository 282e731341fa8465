import pytest

from powersemi import enumerate_semigroups


@pytest.fixture(scope="session")
def catalog():
    """Catalog entries for orders 1..4, shared across the suite."""
    return {n: enumerate_semigroups(n) for n in (1, 2, 3, 4)}
