import pytest

from src.characters.dirichlet import build_real_primitive
from src.cyclotomic.field import get_context


@pytest.fixture
def chi5():
    return build_real_primitive(5)


@pytest.fixture
def chi7():
    return build_real_primitive(7)


@pytest.fixture
def ctx28():
    return get_context(28)


@pytest.fixture
def ctx60():
    return get_context(60)
