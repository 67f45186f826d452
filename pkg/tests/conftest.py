import acceptance_log


def pytest_terminal_summary(terminalreporter):
    if not acceptance_log.results:
        return
    terminalreporter.section("acceptance criteria")
    for number, title, status in sorted(acceptance_log.results):
        terminalreporter.write_line(f"CRITERION {number:2d} {status}  {title}")
