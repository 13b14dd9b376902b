import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from kn3genus import fixture_set


@pytest.fixture(scope="session")
def planar4():
    return fixture_set("planar_4")


@pytest.fixture(scope="session")
def strong6():
    return fixture_set("strong_6")


@pytest.fixture(scope="session")
def nonorientable6():
    return fixture_set("nonorientable_6")


@pytest.fixture(scope="session")
def klein4x2():
    return fixture_set("klein_4x2")
