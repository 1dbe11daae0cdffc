import os

import pytest
from hypothesis import settings

# Reproducible by default; HYPOTHESIS_PROFILE=explore with --hypothesis-seed=N
# gives a different, still repeatable, run.
settings.register_profile("fixed", derandomize=True, deadline=None)
settings.register_profile("explore", deadline=None)
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "fixed"))


def pytest_configure(config):
    config.addinivalue_line("markers", "acceptance(label): exit criterion, reported in the summary")
    config._acceptance_lines = []


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    marker = item.get_closest_marker("acceptance")
    if marker and rep.when == "call":
        status = "PASS" if rep.passed else "FAIL"
        item.config._acceptance_lines.append((marker.args[0], status))


def pytest_terminal_summary(terminalreporter, config):
    lines = config._acceptance_lines
    if lines:
        terminalreporter.section("acceptance criteria")
        for label, status in sorted(lines, key=lambda ls: int(ls[0].split(".")[0])):
            terminalreporter.write_line(f"{status}  {label}")
