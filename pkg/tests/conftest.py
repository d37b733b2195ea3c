import pytest

from shiftlab.algebraic import GenericConfig

_CRITERIA: list[str] = []


@pytest.fixture
def cfg() -> GenericConfig:
    return GenericConfig(seed=12345)


@pytest.fixture
def report():
    """Record one PASS/FAIL line per acceptance criterion."""

    def _report(label: str, ok: bool, detail: str = "") -> bool:
        line = f"{'PASS' if ok else 'FAIL'}  {label}" + (f"  ({detail})" if detail else "")
        print(line)
        _CRITERIA.append(line)
        return ok

    return _report


def pytest_terminal_summary(terminalreporter):
    if _CRITERIA:
        terminalreporter.section("acceptance criteria")
        for line in _CRITERIA:
            terminalreporter.write_line(line)
