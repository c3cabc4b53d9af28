import time
from contextlib import contextmanager

import pytest

# criterion number -> (title, passed, seconds, detail)
GATE: dict[int, tuple[str, bool, float, str]] = {}


@pytest.fixture
def criterion():
    """Context manager that times one acceptance criterion and records its outcome."""

    @contextmanager
    def run(number: int, title: str, limit: float | None = None):
        notes: list[str] = []
        start = time.perf_counter()
        try:
            yield notes
        except BaseException as exc:
            reason = f"{type(exc).__name__}: {exc}".splitlines()[0]
            GATE[number] = (title, False, time.perf_counter() - start, "; ".join(notes + [reason]))
            raise
        elapsed = time.perf_counter() - start
        passed = limit is None or elapsed < limit
        if not passed:
            notes.append(f"over the {limit:.0f}s budget")
        GATE[number] = (title, passed, elapsed, "; ".join(notes))
        assert passed, f"criterion {number} took {elapsed:.1f}s, budget {limit}s"

    return run


def pytest_terminal_summary(terminalreporter):
    if not GATE:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(GATE):
        title, passed, elapsed, detail = GATE[number]
        line = f"criterion {number}: {'PASS' if passed else 'FAIL'}  {title}  ({elapsed:.1f}s)"
        if detail:
            line += f"  [{detail}]"
        terminalreporter.write_line(line)
