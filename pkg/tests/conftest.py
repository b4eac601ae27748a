import pytest

from twothreshold import GridDim, GridFunction


@pytest.fixture
def g44():
    return GridDim(4, 4)


def tf(m, n, pts):
    return GridFunction.from_true_points(GridDim(m, n), pts)


ACCEPTANCE_RESULTS = []


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for line in ACCEPTANCE_RESULTS:
        terminalreporter.write_line(line)
