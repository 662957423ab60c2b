from fractions import Fraction

import pytest

from mmeixner.cli import DEFAULT_PARAMS
from mmeixner.meixner import Params


@pytest.fixture
def p1():
    return DEFAULT_PARAMS[0]


@pytest.fixture
def p2():
    return DEFAULT_PARAMS[1]


@pytest.fixture
def p3():
    return DEFAULT_PARAMS[2]


@pytest.fixture
def p1_beta3():
    return Params(1, Fraction(3), (Fraction(1, 2),))


def pytest_terminal_summary(terminalreporter):
    import sys

    mod = sys.modules.get("test_acceptance") or sys.modules.get("tests.test_acceptance")
    lines = getattr(mod, "RESULTS", None)
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)
