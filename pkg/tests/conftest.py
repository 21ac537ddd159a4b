import random
import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

_ACCEPTANCE_LINES: list[str] = []


@pytest.fixture
def rng():
    return random.Random(20201019)


@pytest.fixture
def report(request):
    """Emit one PASS/FAIL line for the calling acceptance test, then assert."""

    def emit(label: str, ok: bool, detail: str = "") -> None:
        line = f"{'PASS' if ok else 'FAIL'} {label}" + (f" :: {detail}" if detail else "")
        _ACCEPTANCE_LINES.append(line)
        print(line)
        assert ok, line

    return emit


def pytest_terminal_summary(terminalreporter):
    if _ACCEPTANCE_LINES:
        terminalreporter.section("acceptance")
        for line in _ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
