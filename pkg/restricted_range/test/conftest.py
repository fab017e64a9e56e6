"""
Pytest configuration and shared fixtures for semigroup tests.
"""

import pytest

from restricted_range.schemas import Params, make_universe


@pytest.fixture
def u321():
    """Z ⊊ Y ⊊ X with |Z| = 1: members send 0 and 1 to 0."""
    return make_universe(3, 2, 1)


@pytest.fixture
def u432():
    """Z ⊊ Y ⊊ X with |Z| = 2; 32 members."""
    return make_universe(4, 3, 2)


@pytest.fixture
def u222():
    """T(X) on two points."""
    return make_universe(2, 2, 2)


@pytest.fixture
def u333():
    """T(X) on three points."""
    return make_universe(3, 3, 3)


@pytest.fixture
def u442():
    """T(X,Z) with |Z| = 2."""
    return make_universe(4, 4, 2)


@pytest.fixture
def u322():
    """T̄(X,Y): Y = Z is invariant."""
    return make_universe(3, 2, 2)


@pytest.fixture
def small_params():
    """A materialization bound small enough to trip on n = 4."""
    return Params(materialization_bound=100)


def pytest_configure(config):
    """Configure pytest with custom markers."""
    config.addinivalue_line(
        "markers", "slow: marks tests as slow (deselect with '-m \"not slow\"')"
    )
    config.addinivalue_line(
        "markers", "integration: marks tests as integration tests"
    )
