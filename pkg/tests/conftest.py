import pytest

from omeganorm.catalog import DEFAULT_CATALOG, builtin
from omeganorm.perm import Permutation


def cyc(*cycles, n):
    return Permutation.from_cycles(cycles, n)


@pytest.fixture(scope="session")
def groups():
    """Every default-catalog group, built once, keyed by name."""
    return {spec.name: spec.build() for spec in DEFAULT_CATALOG}


@pytest.fixture(scope="session")
def S3(groups):
    return groups["S3"]


@pytest.fixture(scope="session")
def D8(groups):
    return groups["D8"]


@pytest.fixture(scope="session")
def Q16(groups):
    return groups["Q16"]


@pytest.fixture(scope="session")
def A5(groups):
    return groups["A5"]


@pytest.fixture(scope="session")
def small_groups(groups):
    """Catalog groups small enough for the brute-force oracles."""
    return [G for G in groups.values() if G.order <= 24]


@pytest.fixture(scope="session")
def Q8():
    return builtin("Q8")
