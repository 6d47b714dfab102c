import math
import os
import sys

import numpy as np
import pytest

sys.path.insert(0, os.path.dirname(__file__))

from zerocircle.series import TruncatedSeries  # noqa: E402


def exp_series(order, c=1.0):
    coeffs = np.array([c**k * math.exp(-math.lgamma(k + 1)) for k in range(order + 1)], dtype=complex)
    return TruncatedSeries(coeffs)


@pytest.fixture
def rng():
    return np.random.default_rng(20261019)


_acceptance = {}


def pytest_runtest_logreport(report):
    if report.when == "call" and "test_acceptance" in report.nodeid:
        _acceptance[report.nodeid.split("::")[-1]] = report.outcome


def pytest_terminal_summary(terminalreporter):
    if not _acceptance:
        return
    terminalreporter.section("acceptance criteria")
    for name, outcome in sorted(_acceptance.items(), key=lambda kv: int(kv[0].split("_")[2])):
        terminalreporter.write_line(f"{'PASS' if outcome == 'passed' else 'FAIL'}  {name}")
