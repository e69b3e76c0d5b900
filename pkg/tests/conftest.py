import pytest

from kannanlab import builtins as catalog


@pytest.fixture(scope="session")
def five_point():
    return catalog.five_point_pair()


@pytest.fixture(scope="session")
def three_point():
    return catalog.three_point_cycle()


@pytest.fixture(scope="session")
def harmonic50():
    return catalog.harmonic_pair(50)


@pytest.fixture(scope="session")
def grid():
    return catalog.thirds_grid()
