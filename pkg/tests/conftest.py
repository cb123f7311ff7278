import random

import pytest
from hypothesis import strategies as st

from hhc.dyadic import Dyadic, DyadicVec2


def dyadics(max_exp=12, bound=1 << 20):
    return st.builds(Dyadic, st.integers(-bound, bound), st.integers(0, max_exp))


def unit_dyadics(max_exp=12):
    """Dyadic values in [0, 1]."""
    return st.integers(0, max_exp).flatmap(
        lambda e: st.integers(0, 1 << e).map(lambda n: Dyadic(n, e)))


unit_points = st.builds(DyadicVec2, unit_dyadics(), unit_dyadics())


def digit_lists(min_size=1, max_size=12):
    return st.lists(st.integers(0, 3), min_size=min_size, max_size=max_size)


@pytest.fixture
def rng():
    return random.Random(1234)


# One line per acceptance criterion, filled in by test_acceptance.py.
ACCEPTANCE_LINES: dict[int, str] = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_LINES:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(ACCEPTANCE_LINES):
        terminalreporter.write_line(ACCEPTANCE_LINES[n])
