import time
from contextlib import contextmanager
from pathlib import Path

import pytest

from hesslcp import load_cycle, load_instance

DATA_DIR = Path(__file__).resolve().parent.parent / "data"

# one entry per acceptance criterion: (number, description, passed, seconds)
ACCEPTANCE_RESULTS = []


@contextmanager
def criterion(number: int, description: str, budget_seconds: float):
    """Time an acceptance criterion body and record its outcome.

    The wall-clock budget is part of the criterion, so exceeding it fails
    the test like any other assertion.
    """
    start = time.perf_counter()
    try:
        yield
        elapsed = time.perf_counter() - start
        assert elapsed < budget_seconds, (
            f"criterion {number} took {elapsed:.2f}s, budget {budget_seconds}s"
        )
    except BaseException:
        ACCEPTANCE_RESULTS.append(
            (number, description, False, time.perf_counter() - start)
        )
        raise
    ACCEPTANCE_RESULTS.append((number, description, True, elapsed))


@pytest.fixture
def cyclic_instance():
    return load_instance(DATA_DIR / "cyclic_tridiagonal.json")


@pytest.fixture
def cyclic_cycle():
    return load_cycle(DATA_DIR / "cyclic_tridiagonal_cycle.json")


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for number, description, passed, elapsed in sorted(ACCEPTANCE_RESULTS):
        verdict = "PASS" if passed else "FAIL"
        terminalreporter.write_line(
            f"criterion {number}: {verdict} ({elapsed:.2f}s) {description}"
        )
