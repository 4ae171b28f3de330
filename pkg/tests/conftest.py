import pytest

from hodge_degrees import new_datum


@pytest.fixture
def datum():
    return new_datum
