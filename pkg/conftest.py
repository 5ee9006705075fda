# Third party imports
import pytest

# local application imports
from steenres import Resolver

default_max_stem = 16
default_max_s = 4


def pytest_addoption(parser):
    parser.addoption("--max-stem", action="store", type=int, default=default_max_stem)
    parser.addoption("--max-s", action="store", type=int, default=default_max_s)


@pytest.fixture(scope="session")
def grange(request):
    max_stem = request.config.getoption("--max-stem")
    max_s = request.config.getoption("--max-s")

    return max_stem, max_s


@pytest.fixture(scope="session")
def gnaive(request, grange):
    resolver = Resolver(strategy="naive")
    resolver.resolve(*grange)
    return resolver


@pytest.fixture(scope="session")
def gauto(request, grange):
    resolver = Resolver(strategy="auto")
    resolver.resolve(*grange)
    return resolver


@pytest.fixture(scope="module")
def gsmall(request):
    """
    Naive resolution through stem 8, s <= 3.
    """
    resolver = Resolver(strategy="naive")
    resolver.resolve(8, 3)

    def fin():
        resolver.cache.clear()

    request.addfinalizer(fin)
    return resolver
