import pytest

from hgs.catalog import resolve_spec


@pytest.fixture(scope="session")
def S5():
    return resolve_spec("S5")


@pytest.fixture(scope="session")
def A5():
    return resolve_spec("A5")


@pytest.fixture(scope="session")
def A6():
    return resolve_spec("A6")


@pytest.fixture(scope="session")
def A5xC2():
    return resolve_spec("AxCp(A5,2)")


@pytest.fixture(scope="session")
def small_catalog():
    labels = ["C4", "V4", "C6", "S3", "C8", "C4xC2", "C2xC2xC2", "D4", "Q8"]
    return {label: resolve_spec(label) for label in labels}
