import pytest

from zetaline import DEFAULT_CONFIG, full_census


@pytest.fixture(scope="session")
def cfg():
    return DEFAULT_CONFIG


@pytest.fixture(scope="session")
def census50():
    return full_census(50.0)


@pytest.fixture(scope="session")
def census100():
    return full_census(100.0)
