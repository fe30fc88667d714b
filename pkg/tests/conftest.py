import pytest

_criteria = []


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(tag, text): acceptance criterion reported in the summary")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    mark = item.get_closest_marker("criterion")
    if mark is None:
        return
    if rep.when == "call" or (rep.when == "setup" and not rep.passed):
        _criteria.append((mark.args[0], mark.args[1], rep.passed, rep.duration))


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for tag, text, ok, dur in sorted(_criteria, key=lambda c: int(c[0][2:])):
        terminalreporter.write_line(f"{tag} {'PASS' if ok else 'FAIL'} ({dur:.2f}s) {text}")
