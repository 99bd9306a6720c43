_criteria: list[tuple[str, str, list]] = []


def pytest_runtest_logreport(report):
    if "test_acceptance.py" not in report.nodeid:
        return
    if report.when == "call" or (report.when == "setup" and report.outcome != "passed"):
        _criteria.append((report.nodeid, report.outcome, list(report.user_properties)))


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for nodeid, outcome, props in _criteria:
        lines = [v for k, v in props if k == "criterion"]
        if lines:
            for line in lines:
                terminalreporter.write_line(line)
        else:
            name = nodeid.split("::")[-1]
            terminalreporter.write_line(f"FAIL {name}: {outcome} before a verdict was recorded")
