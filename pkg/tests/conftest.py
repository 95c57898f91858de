import pytest

from hlnet import g84, hypercube, materialize


@pytest.fixture(scope="session")
def q3():
    return materialize(hypercube(3))


@pytest.fixture(scope="session")
def q4():
    return materialize(hypercube(4))


@pytest.fixture(scope="session")
def g84_graph():
    return materialize(g84())
