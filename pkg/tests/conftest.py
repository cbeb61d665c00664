import sys
from pathlib import Path

# Ensure project root is on the Python path so tests can import local modules
PROJECT_ROOT = Path(__file__).resolve().parent.parent
if str(PROJECT_ROOT) not in sys.path:
    sys.path.insert(0, str(PROJECT_ROOT))

import pytest

from dynkin.diagram import DynkinType
from dynkin.quiver import build_quiver, running_example


@pytest.fixture
def a1():
    return build_quiver(DynkinType("A", 1), [])


@pytest.fixture
def a2():
    return build_quiver(DynkinType("A", 2), [(1, 2)])


@pytest.fixture
def a3():
    return build_quiver(DynkinType("A", 3), [(1, 2), (2, 3)])


@pytest.fixture
def d5():
    return running_example()
