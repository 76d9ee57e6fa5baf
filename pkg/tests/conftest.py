import pytest
from hypothesis import settings

from symca.datasets import eyes_hair_table, five_individuals

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")


@pytest.fixture
def example_xy():
    return five_individuals(vocabulary_order=True)


@pytest.fixture
def eyes_hair():
    return eyes_hair_table()


def pytest_terminal_summary(terminalreporter):
    from tests import test_acceptance

    if test_acceptance.VERDICTS:
        terminalreporter.section("acceptance criteria")
        for line in test_acceptance.VERDICTS:
            terminalreporter.write_line(line)
