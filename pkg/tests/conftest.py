import sys
from pathlib import Path

import pytest
from hypothesis import strategies as st

sys.path.insert(0, str(Path(__file__).parent))

from degroot.finite import Preorder, alexandrov_from_preorder  # noqa: E402

ACCEPTANCE_LINES = []


@st.composite
def preorders(draw, min_n=0, max_n=5):
    n = draw(st.integers(min_n, max_n))
    pairs = draw(st.lists(st.tuples(st.integers(0, max(n - 1, 0)), st.integers(0, max(n - 1, 0))),
                          max_size=2 * n))
    return Preorder.generated_by(n, pairs if n else [])


@st.composite
def topologies(draw, min_n=0, max_n=5):
    return alexandrov_from_preorder(draw(preorders(min_n, max_n)))


@pytest.fixture
def record_criterion():
    def record(number, name, passed, detail=""):
        ACCEPTANCE_LINES.append(f"[{'PASS' if passed else 'FAIL'}] criterion {number}: {name} {detail}".rstrip())
        print(ACCEPTANCE_LINES[-1])
    return record


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
