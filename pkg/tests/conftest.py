import pytest

from treebij.trees import validate_tree

ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


@pytest.fixture
def fig1():
    """Rooted tree on [6] from the LCA example, rooted at 4."""
    return validate_tree(range(1, 7), [(4, 2), (4, 5), (2, 6), (5, 3), (5, 1)]).rooted_at(4)


@pytest.fixture
def fig6_edges():
    return [(2, 10), (2, 12), (12, 6), (12, 9), (6, 8), (6, 5), (8, 1), (8, 3), (5, 4), (4, 7), (4, 11)]


@pytest.fixture
def f13_values():
    return [8, 6, 8, 5, 4, 12, 4, 6, 12, 2, 4, 2, 3]
