from __future__ import annotations

import pytest

from algebra_gen import load_corpus
from leibalg.families import build_example_4_9, i2


@pytest.fixture(scope="session")
def corpus():
    return load_corpus()


@pytest.fixture
def g49():
    return build_example_4_9()


@pytest.fixture
def i2_alg():
    return i2()


ACCEPTANCE_KEY = pytest.StashKey[list]()


def pytest_configure(config):
    config.stash[ACCEPTANCE_KEY] = []


@pytest.fixture
def acceptance_log(request):
    return request.config.stash[ACCEPTANCE_KEY]


def pytest_terminal_summary(terminalreporter, config):
    lines = config.stash.get(ACCEPTANCE_KEY, [])
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)
