import pytest

from e6inv.invariants import registry


@pytest.fixture(scope="session")
def reg():
    return registry()
