import os
import sys

import pytest
from hypothesis import HealthCheck, settings

sys.path.insert(0, os.path.dirname(__file__))

from wlpositroid import WilsonLoopDiagram  # noqa: E402

settings.register_profile(
    "default", max_examples=60, deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("default")


@pytest.fixture
def eight():
    # q=(1,4), p=(2,4), s=(5,7), r=(5,8)
    return WilsonLoopDiagram(8, [(1, 4), (2, 4), (5, 7), (5, 8)])


@pytest.fixture
def seven():
    # rows p=(1,6), q=(1,5), s=(1,4)
    return WilsonLoopDiagram(7, [(1, 6), (1, 5), (1, 4)])


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    if mod is None or not getattr(mod, "LINES", None):
        return
    terminalreporter.section("acceptance criteria")
    for line in mod.LINES:
        terminalreporter.write_line(line)
