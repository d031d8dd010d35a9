import pytest

from matchkit import search

# Lines reported by test_acceptance.py, echoed at the end of the run.
ACCEPTANCE: list[str] = []


@pytest.fixture(scope="session")
def corpus_cache(tmp_path_factory):
    """One cache directory for every enumeration in the session."""
    return tmp_path_factory.mktemp("corpus-cache")


@pytest.fixture(scope="session")
def tricyclic(corpus_cache):
    """Connected (n, n+2) corpora for n = 4..8, keyed by n."""
    return {n: list(search.enumerate_graphs(search.CorpusSpec(n, n + 2), cache_dir=corpus_cache))
            for n in range(4, 9)}


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE:
            terminalreporter.write_line(line)
