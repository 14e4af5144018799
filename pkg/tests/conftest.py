import numpy as np
import pytest
from hypothesis import strategies as st

from solowline import LineInstance


def random_instance(rng: np.random.Generator, n: int, low: float = 0.0, high: float = 10.0) -> LineInstance:
    """Sorted uniform draw, redrawn until all coordinates are distinct."""
    while True:
        x = np.sort(rng.uniform(low, high, n))
        if np.all(np.diff(x) > 0):
            return LineInstance(x)


@pytest.fixture
def rng():
    return np.random.default_rng(20260101)


def line_instances(min_size=1, max_size=50, min_gap=1e-3, max_gap=5.0):
    """Hypothesis strategy: a start coordinate plus strictly positive gaps."""
    return st.builds(
        lambda start, gaps: LineInstance(start + np.concatenate([[0.0], np.cumsum(gaps)])),
        st.floats(-100, 100, allow_nan=False),
        st.lists(st.floats(min_gap, max_gap, allow_nan=False), min_size=min_size - 1, max_size=max_size - 1),
    )


# one line per acceptance criterion, printed in the terminal summary
ACCEPTANCE_RESULTS: dict[int, str] = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for num in sorted(ACCEPTANCE_RESULTS):
        terminalreporter.write_line(ACCEPTANCE_RESULTS[num])
