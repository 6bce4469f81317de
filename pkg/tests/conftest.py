import pytest

from qalgebra.seqcore import compositions

_ACCEPTANCE_LINES: list[str] = []


@pytest.fixture
def acceptance_report():
    return _ACCEPTANCE_LINES


def pytest_terminal_summary(terminalreporter):
    if _ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in _ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


def monomials_up_to(max_len: int, max_degree: int, min_len: int = 1):
    for k in range(min_len, max_len + 1):
        for d in range(max_degree + 1):
            yield from compositions(k, d)
