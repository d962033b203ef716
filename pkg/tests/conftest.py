import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from mbfkit.enumeration import CountOptions, count_all


@pytest.fixture(scope="session")
def report4():
    return count_all(4)


@pytest.fixture(scope="session")
def report5():
    return count_all(5)


@pytest.fixture(scope="session")
def report6():
    return count_all(6)


@pytest.fixture(scope="session")
def report7_k4():
    return count_all(7, CountOptions(max_minterms=4))
