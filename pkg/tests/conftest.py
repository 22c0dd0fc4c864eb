import os

import pytest


@pytest.fixture(scope="session", autouse=True)
def _cache_dir(tmp_path_factory):
    # keep every on-disk cache write inside the test session's temp area
    d = tmp_path_factory.mktemp("spl-cache")
    old = os.environ.get("SPL_CACHE_DIR")
    os.environ["SPL_CACHE_DIR"] = str(d)
    yield d
    if old is None:
        os.environ.pop("SPL_CACHE_DIR", None)
    else:
        os.environ["SPL_CACHE_DIR"] = old


@pytest.fixture
def R4():
    from spl.catalog import RING4

    return RING4


@pytest.fixture
def R3():
    from spl.catalog import RING3

    return RING3
