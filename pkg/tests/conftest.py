import os

import pytest

from circuitwalks import load


@pytest.fixture(scope="session", autouse=True)
def isolated_cache_dir(tmp_path_factory):
    """Point the result cache at a fresh directory for the whole session so
    tests never read or write the user's cache."""
    d = tmp_path_factory.mktemp("cwcache")
    old = os.environ.get("CIRCUITWALKS_CACHE_DIR")
    os.environ["CIRCUITWALKS_CACHE_DIR"] = str(d)
    yield d
    if old is None:
        os.environ.pop("CIRCUITWALKS_CACHE_DIR", None)
    else:
        os.environ["CIRCUITWALKS_CACHE_DIR"] = old


@pytest.fixture(scope="session")
def m4():
    return load("m4")


@pytest.fixture(scope="session")
def s28():
    return load("s28")


@pytest.fixture(scope="session")
def s25():
    return load("s25")
