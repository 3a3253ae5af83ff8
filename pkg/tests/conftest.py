import pytest
from hypothesis import settings, strategies as st

from torusorders.orders import BiOrder, OrderConfig
from torusorders.words import Word

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")

letters = st.sampled_from([1, -1, 2, -2])
words = st.lists(letters, max_size=14).map(Word)
short_words = st.lists(letters, max_size=6).map(Word)


@pytest.fixture(scope="session")
def nonstandard():
    return BiOrder(OrderConfig(kind="nonstandard"))


@pytest.fixture(scope="session")
def standard():
    return BiOrder(OrderConfig(kind="standard"))


ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES, key=lambda s: int(s.split()[1].rstrip(":"))):
            terminalreporter.write_line(line)
