import pytest

from hofnet import GeneratorParams, generate

_acceptance_lines: list[str] = []


@pytest.fixture(scope="session")
def build():
    """Memoized generator so modules can share small complexes."""
    cache = {}

    def _build(K, m, t):
        if (K, m, t) not in cache:
            cache[K, m, t] = generate(GeneratorParams(K, m, t))
        return cache[K, m, t]

    return _build


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    if rep.when == "call" and item.get_closest_marker("acceptance"):
        status = "PASS" if rep.passed else "FAIL"
        _acceptance_lines.append(f"{status}  {item.name}")


def pytest_terminal_summary(terminalreporter):
    if _acceptance_lines:
        terminalreporter.section("acceptance criteria")
        for line in _acceptance_lines:
            terminalreporter.write_line(line)
