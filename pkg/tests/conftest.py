import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from zfk.modelcheck import enumerate_universe  # noqa: E402


@pytest.fixture(scope="session")
def U11():
    return enumerate_universe(1, 1)


@pytest.fixture(scope="session")
def U21():
    return enumerate_universe(2, 1)


@pytest.fixture(scope="session")
def U22():
    return enumerate_universe(2, 2)
