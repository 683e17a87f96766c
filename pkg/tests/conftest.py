import os
import sys
from functools import lru_cache

import pytest

sys.path.insert(0, os.path.dirname(__file__))

from assocord.reproduce import run_target  # noqa: E402

JOBS = min(4, os.cpu_count() or 1)


@lru_cache(maxsize=None)
def target_results(target: str):
    """One run per target per session; several modules read the same results."""
    return tuple(run_target(target, jobs=JOBS))


@pytest.fixture(scope="session")
def reproduce():
    return target_results


def pytest_terminal_summary(terminalreporter):
    from acceptance_report import LINES
    if LINES:
        terminalreporter.section("acceptance criteria")
        for line in LINES:
            terminalreporter.write_line(line)
