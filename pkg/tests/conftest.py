import random
import sys
from fractions import Fraction

import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

settings.register_profile(
    "default",
    max_examples=60,
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("default")

fractions = st.builds(
    Fraction,
    st.integers(min_value=-20, max_value=20),
    st.integers(min_value=1, max_value=12),
)


def euler_maps(max_index=12, bound=6, values=None):
    """Sparse exponent maps d -> value with small support."""
    values = values if values is not None else st.integers(min_value=-bound, max_value=bound)
    return st.dictionaries(st.integers(min_value=1, max_value=max_index), values, max_size=5)


def unit_series(order=16):
    """Series with constant term 1 and small integer coefficients."""
    return st.lists(st.integers(min_value=-5, max_value=5), min_size=order, max_size=order).map(
        lambda cs: [1] + cs
    )


@pytest.fixture
def rng():
    return random.Random(20240611)


def pytest_terminal_summary(terminalreporter):
    module = sys.modules.get("test_acceptance")
    if module is None or not module.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for _, line in sorted(module.RESULTS.items()):
        terminalreporter.write_line(line)
