import pytest

from critline.dirchar import DiscriminantSplit
from critline.quadfield import class_group


@pytest.fixture(scope="session")
def genus15():
    return DiscriminantSplit(-3, 5)


@pytest.fixture(scope="session")
def trivial15():
    return DiscriminantSplit(1, -15)


@pytest.fixture(scope="session")
def trivial23():
    return DiscriminantSplit(1, -23)


@pytest.fixture(scope="session")
def group23():
    return class_group(-23)


@pytest.fixture(scope="session")
def group15():
    return class_group(-15)


@pytest.fixture(scope="session")
def group4():
    return class_group(-4)
