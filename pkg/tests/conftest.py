import sys
from pathlib import Path

import numpy as np
import pytest

from homly import Algebra, LinearMap, catalog, cyclic_rotation

sys.path.insert(0, str(Path(__file__).parent))

ALL = 10**9  # counterexample cap large enough to list every failure


def build_so3(alpha=None) -> Algebra:
    c = np.zeros((3, 3, 3), dtype=object)
    for i, j, k in ((0, 1, 2), (1, 2, 0), (2, 0, 1)):
        c[i, j, k] = 1
        c[j, i, k] = -1
    return Algebra(3, binary=c, alpha=alpha, name="so3")


@pytest.fixture
def so3() -> Algebra:
    return build_so3()


@pytest.fixture
def pi3() -> LinearMap:
    return cyclic_rotation(3)


@pytest.fixture(scope="session")
def octonion() -> Algebra:
    return catalog.load("octonion-bracket")


@pytest.fixture
def zero_alg() -> Algebra:
    return Algebra(2, binary=np.zeros((2, 2, 2), dtype=object),
                   ternary=np.zeros((2, 2, 2, 2), dtype=object))


def pytest_terminal_summary(terminalreporter):
    acceptance = sys.modules.get("test_acceptance")
    if acceptance is None or not acceptance.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(acceptance.RESULTS):
        terminalreporter.write_line(acceptance.RESULTS[number])
