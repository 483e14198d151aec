import sys

import pytest

import corpus


@pytest.fixture(scope="session")
def corpus_ms():
    return corpus.corpus()


@pytest.fixture(scope="session")
def reports():
    return corpus.verified_reports()


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for line in mod.summary_lines():
        terminalreporter.write_line(line)
