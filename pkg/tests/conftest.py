import numpy as np
import pytest

from orbitcodes.gf import tower_for


@pytest.fixture(scope="session")
def t2_4():
    return tower_for(2, 4)


@pytest.fixture(scope="session")
def t2_6():
    return tower_for(2, 6)


@pytest.fixture(scope="session")
def t3_4():
    return tower_for(3, 4)


@pytest.fixture(scope="session")
def t3_10():
    return tower_for(3, 10)


@pytest.fixture(scope="session")
def t3_11():
    return tower_for(3, 11)


@pytest.fixture(scope="session")
def t2_14():
    return tower_for(2, 14)


@pytest.fixture(scope="session")
def t4_3():
    return tower_for(4, 3)


@pytest.fixture
def rng():
    return np.random.default_rng(12345)
