import pytest
from hypothesis import HealthCheck, settings

settings.register_profile(
    "suite",
    max_examples=60,
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("suite")


from hopfchar.instances import instance_by_name  # noqa: E402


@pytest.fixture(scope="session")
def ck():
    return instance_by_name("ck")


@pytest.fixture(scope="session")
def ck2():
    return instance_by_name("ck2")


@pytest.fixture(scope="session")
def fdb_a():
    return instance_by_name("fdb-a")


@pytest.fixture(scope="session")
def fdb_x():
    return instance_by_name("fdb-x")


@pytest.fixture(scope="session")
def shuffle_ab():
    return instance_by_name("shuffle:ab")


@pytest.fixture(scope="session")
def binomial():
    return instance_by_name("binomial")
