"""Shared acceptance-report plumbing.

The acceptance tests time themselves and register one verdict line
each; the terminal-summary hook replays those lines after pytest's
capture has ended, so they show up in any run mode.
"""

import time

import pytest

_VERDICT_LINES = []


class CriterionTimer:
    """Context manager asserting a wall-time budget and recording a verdict."""

    def __init__(self, number, description, budget):
        self.number = number
        self.description = description
        self.budget = budget

    def __enter__(self):
        self.start = time.perf_counter()
        return self

    def __exit__(self, exc_type, exc, tb):
        elapsed = time.perf_counter() - self.start
        ok = exc_type is None and elapsed < self.budget
        line = (
            f"{'PASS' if ok else 'FAIL'} criterion {self.number:02d}: "
            f"{self.description} [{elapsed:.2f}s / {self.budget:.0f}s]"
        )
        _VERDICT_LINES.append((self.number, line))
        print(line)
        if exc_type is None:
            assert elapsed < self.budget, (
                f"criterion {self.number} exceeded its {self.budget}s budget: {elapsed:.2f}s"
            )
        return False


@pytest.fixture
def criterion():
    return CriterionTimer


def pytest_terminal_summary(terminalreporter):
    if _VERDICT_LINES:
        terminalreporter.section("acceptance criteria")
        for _, line in sorted(_VERDICT_LINES):
            terminalreporter.write_line(line)
