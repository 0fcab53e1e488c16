import os
import random
import sys
import time
from fractions import Fraction

import pytest
from hypothesis import settings

sys.path.insert(0, os.path.dirname(__file__))

from qtcomb.arith import QTPoint  # noqa: E402
from oracles import generic_point  # noqa: E402

settings.register_profile("default", deadline=None)
settings.load_profile("default")

_acceptance = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "acceptance(number, title, limit): acceptance criterion")


@pytest.fixture
def rng(request):
    return random.Random(request.node.nodeid)


@pytest.fixture
def points(rng):
    return [generic_point(rng) for _ in range(3)]


@pytest.fixture
def pt():
    return QTPoint(Fraction(1, 2), Fraction(1, 3))


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_call(item):
    start = time.perf_counter()
    yield
    item.user_properties.append(("elapsed", time.perf_counter() - start))


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    marker = item.get_closest_marker("acceptance")
    if marker is None or rep.when != "call":
        return
    number, title, limit = marker.args
    elapsed = dict(item.user_properties).get("elapsed", 0.0)
    _acceptance[number] = (title, rep.passed, elapsed, limit)


def pytest_terminal_summary(terminalreporter):
    if not _acceptance:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_acceptance):
        title, ok, elapsed, limit = _acceptance[number]
        status = "PASS" if ok else "FAIL"
        terminalreporter.write_line(
            f"[{status}] {number:2d}. {title} ({elapsed:.2f}s, limit {limit}s)")
