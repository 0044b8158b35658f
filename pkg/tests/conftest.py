import os

import pytest


def pytest_collection_modifyitems(config, items):
    """Skip tests marked `extended` unless CIRCODES_EXTENDED=1 is set."""
    if os.environ.get("CIRCODES_EXTENDED") == "1":
        return
    skip = pytest.mark.skip(reason="extended run; set CIRCODES_EXTENDED=1")
    for item in items:
        if "extended" in item.keywords:
            item.add_marker(skip)


def pytest_terminal_summary(terminalreporter):
    """Echo one verdict line per acceptance criterion at the end of the run."""
    import sys
    mod = sys.modules.get("test_acceptance") or sys.modules.get("tests.test_acceptance")
    verdicts = getattr(mod, "VERDICTS", None)
    if verdicts:
        terminalreporter.section("acceptance criteria")
        for line in verdicts:
            terminalreporter.write_line(line)
