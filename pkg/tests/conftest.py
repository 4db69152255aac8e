import pytest

from tanhmap import GrowthRange, Linear, Tanh, classify_sweep

LOGISTIC = (Linear(), GrowthRange(0.0, 1.0))
TANH5 = (Tanh(5.0), GrowthRange(0.0, 1.0))


@pytest.fixture(scope="session")
def logistic_classes():
    return classify_sweep(*LOGISTIC)


@pytest.fixture(scope="session")
def tanh5_classes():
    return classify_sweep(*TANH5)


ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
