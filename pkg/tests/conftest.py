import pytest

_ACCEPTANCE: list[tuple[str, str, str]] = []


class CriterionLog:
    def __init__(self, name: str):
        self.name = name

    def __enter__(self):
        return self

    def __exit__(self, exc_type, exc, tb):
        verdict = "PASS" if exc_type is None else "FAIL"
        detail = "" if exc is None else str(exc).splitlines()[0][:160]
        _ACCEPTANCE.append((self.name, verdict, detail))
        return False


@pytest.fixture
def criterion():
    return CriterionLog


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for name, verdict, detail in _ACCEPTANCE:
        line = f"{verdict}  {name}"
        if detail:
            line += f"  ({detail})"
        terminalreporter.write_line(line)
