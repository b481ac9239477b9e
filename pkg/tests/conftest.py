from __future__ import annotations

import pytest

from mdslift.codes import example1_code
from mdslift.field import make_extension_field, make_prime_field


@pytest.fixture(scope="session")
def f2():
    return make_prime_field(2)


@pytest.fixture(scope="session")
def f3():
    return make_prime_field(3)


@pytest.fixture(scope="session")
def f7():
    return make_prime_field(7)


@pytest.fixture(scope="session")
def f11():
    return make_prime_field(11)


@pytest.fixture(scope="session")
def f13():
    return make_prime_field(13)


@pytest.fixture(scope="session")
def f4():
    return make_extension_field(2, 2)


@pytest.fixture(scope="session")
def f16():
    return make_extension_field(2, 4)


@pytest.fixture(scope="session")
def f49():
    return make_extension_field(7, 2)


@pytest.fixture(scope="session")
def f343():
    return make_extension_field(7, 3)


@pytest.fixture()
def example1():
    # fresh instance per test: the distance cache is per-object
    return example1_code()
