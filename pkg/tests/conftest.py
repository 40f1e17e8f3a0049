import hypothesis.strategies as st
import pytest
from hypothesis import settings

from partdens.partset import PartSet

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")


@st.composite
def small_sets(draw, hi=20):
    """Random subsets of [1, hi]."""
    elems = draw(st.lists(st.integers(1, hi), max_size=hi, unique=True))
    return PartSet.from_elements(elems)


@pytest.fixture
def tmp_csv(tmp_path):
    return tmp_path / "out.csv"


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import LINES
    except ImportError:
        return
    if LINES:
        terminalreporter.section("acceptance criteria")
        for line in LINES:
            terminalreporter.write_line(line)
