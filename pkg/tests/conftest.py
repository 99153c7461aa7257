"""Shared pytest hooks.

Tests that record a "criterion" user property (the acceptance suite)
get one summary line each, printed straight to the terminal so the
pass/fail verdicts survive output capturing.
"""

import pytest

_config = None


def pytest_configure(config):
    global _config
    _config = config


@pytest.hookimpl(trylast=True)
def pytest_runtest_logreport(report):
    if report.when != "call" or _config is None:
        return
    terminal = _config.pluginmanager.get_plugin("terminalreporter")
    if terminal is None:
        return
    for name, value in report.user_properties:
        if name == "criterion":
            verdict = "PASS" if report.passed else "FAIL"
            terminal.write_line("criterion %s: %s" % (value, verdict))
