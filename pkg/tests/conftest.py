import numpy as np
import pytest

from kronq.verify import get_builder


@pytest.fixture(scope="session")
def builder32():
    """Shared n=3, q=2 catalog builder so scans are paid for once."""
    return get_builder(3, 2)


@pytest.fixture(scope="session")
def store32(builder32):
    return builder32.store


@pytest.fixture()
def rng():
    return np.random.default_rng(20260819)
