import os

import pytest
from hypothesis import HealthCheck, settings

from hgk.model import make_representation

settings.register_profile(
    "default", max_examples=60, deadline=None, suppress_health_check=[HealthCheck.too_slow]
)
settings.register_profile("thorough", max_examples=400, deadline=None)
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))


@pytest.fixture
def path_rep():
    """u-v-w on a single edge a-b with two subdivision nodes."""
    return make_representation(
        ["a", "b"],
        [("e", "a", "b", 2)],
        {"u": {"a", ("e", 1)}, "v": {("e", 1), ("e", 2)}, "w": {("e", 2), "b"}},
    )


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import SUMMARY
    except ImportError:
        return
    if SUMMARY:
        terminalreporter.section("acceptance criteria")
        for line in SUMMARY:
            terminalreporter.write_line(line)
