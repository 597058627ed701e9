import random

import pytest
from hypothesis import settings

from idealpow.curve import Curve
from idealpow.polyring import Poly, poly_parse

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")

ACCEPTANCE_LINES: list[str] = []


@pytest.fixture
def curve5():
    """y^2 = x^3 + 1 over F_5."""
    return Curve(5, poly_parse("x^3+1", 5), Poly.zero(5))


@pytest.fixture
def rng():
    return random.Random(12345)


@pytest.fixture
def acceptance_log():
    return ACCEPTANCE_LINES


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
