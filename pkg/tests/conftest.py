import os
import sys

import pytest

sys.path.insert(0, os.path.dirname(__file__))

_LINES_KEY = pytest.StashKey[list]()


@pytest.fixture
def criterion(request, capsys):
    """Record one pass/fail line for an acceptance criterion and echo it live."""

    def record(number: int, ok: bool, detail: str) -> bool:
        line = f"criterion {number:>2}: {'PASS' if ok else 'FAIL'}  {detail}"
        request.config.stash.setdefault(_LINES_KEY, []).append(line)
        with capsys.disabled():
            print(f"\n{line}")
        return ok

    return record


def pytest_terminal_summary(terminalreporter, config):
    lines = config.stash.get(_LINES_KEY, [])
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in sorted(lines, key=lambda s: int(s.split()[1].rstrip(":"))):
            terminalreporter.write_line(line)
