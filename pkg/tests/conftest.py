import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from fincat.core import Functor  # noqa: E402
from fincat.gallery import terminal, walking_arrow, walking_idempotent  # noqa: E402


@pytest.fixture
def E():
    return walking_idempotent()


@pytest.fixture
def one():
    return terminal()


@pytest.fixture
def arrow():
    return walking_arrow()


@pytest.fixture
def collapse(E, one):
    """G: E → 𝟙."""
    return Functor(E, one, [0], [0, 0], name="G")


@pytest.fixture
def point(E, one):
    """F: 𝟙 → E, ∗ ↦ ∗."""
    return Functor(one, E, [0], [0], name="F")


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    if mod is None or not mod.REPORTED:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(mod.REPORTED):
        terminalreporter.write_line(mod.REPORTED[n])
