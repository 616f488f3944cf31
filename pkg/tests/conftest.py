"""Shared fixtures and the acceptance-criteria summary hook."""

from contextlib import contextmanager

import pytest

from growingtrees import enumeration

# criterion number -> (description, passed). Populated by the acceptance
# tests through the criterion fixture; rendered after the test run.
_ACCEPTANCE: dict[int, tuple[str, bool]] = {}


@contextmanager
def _record(num: int, desc: str):
    _ACCEPTANCE[num] = (desc, False)
    yield
    _ACCEPTANCE[num] = (desc, True)


@pytest.fixture
def criterion():
    """Context manager marking one acceptance criterion pass/fail."""
    return _record


@pytest.fixture(scope="session")
def table14():
    return enumeration.t_table(14)


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for num in sorted(_ACCEPTANCE):
        desc, ok = _ACCEPTANCE[num]
        verdict = "PASS" if ok else "FAIL"
        terminalreporter.write_line(f"ACCEPTANCE {num}: {verdict} - {desc}")
