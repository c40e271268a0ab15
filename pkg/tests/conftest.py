from __future__ import annotations

import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from qspecdim.rootdata import build_root_system

settings.register_profile("default", deadline=None, max_examples=40, suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")

SMALL_TYPES = [("A", 1), ("A", 2), ("A", 3), ("B", 2), ("B", 3), ("C", 2), ("C", 3), ("D", 4)]


@st.composite
def small_root_systems(draw):
    key, r = draw(st.sampled_from(SMALL_TYPES))
    return build_root_system(key, r)


@st.composite
def dominant_weights(draw, rs, max_label=3):
    labels = draw(st.lists(st.integers(0, max_label), min_size=rs.rank, max_size=rs.rank))
    return rs.from_labels(labels)


# acceptance summary: one line per criterion, printed after the run
ACCEPTANCE: dict[int, tuple[bool, str]] = {}


@pytest.fixture
def record():
    def _record(number: int, ok: bool, detail: str = "") -> None:
        ACCEPTANCE[number] = (ok, detail)

    return _record


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(ACCEPTANCE):
        ok, detail = ACCEPTANCE[number]
        line = f"criterion {number:2d}: {'PASS' if ok else 'FAIL'}"
        terminalreporter.write_line(f"{line}  {detail}" if detail else line)
