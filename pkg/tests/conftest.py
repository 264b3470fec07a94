import contextlib
import time

import pytest

_RESULTS: dict = {}


@pytest.fixture
def criterion():
    """Context manager recording one PASS/FAIL line per acceptance criterion."""

    @contextlib.contextmanager
    def run(number, title):
        start = time.perf_counter()
        notes = []
        try:
            yield notes
        except BaseException as exc:
            _RESULTS[number] = ("FAIL", title, time.perf_counter() - start, notes + [type(exc).__name__])
            raise
        _RESULTS[number] = ("PASS", title, time.perf_counter() - start, notes)

    return run


def pytest_terminal_summary(terminalreporter):
    if not _RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_RESULTS):
        status, title, elapsed, notes = _RESULTS[number]
        extra = f" [{'; '.join(notes)}]" if notes else ""
        terminalreporter.write_line(f"criterion {number}: {status} {title} ({elapsed:.1f}s){extra}")
