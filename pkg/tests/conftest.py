import os
import sys

import pytest
from hypothesis import settings
from hypothesis import strategies as st

sys.path.insert(0, os.path.dirname(__file__))

from sylvester.ring import EntryVar, Monomial, MultiPoly  # noqa: E402

settings.register_profile("ci", max_examples=100, deadline=None, derandomize=True)
settings.load_profile("ci")


def pytest_addoption(parser):
    parser.addoption("--run-slow", action="store_true", help="include symbolic n = 5 checks")


def pytest_collection_modifyitems(config, items):
    if config.getoption("--run-slow"):
        return
    skip = pytest.mark.skip(reason="needs --run-slow")
    for item in items:
        if "slow" in item.keywords:
            item.add_marker(skip)


def entry_vars(max_row=3, max_col=3):
    return st.builds(EntryVar, st.integers(1, max_row), st.integers(1, max_col))


def monomials(max_row=3, max_col=3, max_exp=3, max_factors=3):
    return st.lists(st.tuples(entry_vars(max_row, max_col), st.integers(1, max_exp)),
                    max_size=max_factors).map(Monomial)


def polys(max_row=3, max_col=3, max_exp=3, max_terms=5, coeff=20):
    return st.dictionaries(monomials(max_row, max_col, max_exp), st.integers(-coeff, coeff),
                           max_size=max_terms).map(MultiPoly)


def multilinear_polys(max_row=4, max_col=3, max_terms=5):
    """Polynomials with every exponent 1, over rows 1..max_row."""
    return polys(max_row, max_col, max_exp=1, max_terms=max_terms)


@pytest.fixture
def m3_rows():
    return [[1, 2, 3], [4, 5, 6], [7, 8, 10]]


# -- acceptance reporting ------------------------------------------------------

_ACCEPTANCE = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "acceptance(number, title): an exit criterion")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    marker = item.get_closest_marker("acceptance")
    if marker is None:
        return
    number, title = marker.args
    ok = report.passed if report.when == "call" else not report.failed
    prev = _ACCEPTANCE.get(number, (title, True))
    _ACCEPTANCE[number] = (title, prev[1] and ok)


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_ACCEPTANCE):
        title, ok = _ACCEPTANCE[number]
        terminalreporter.write_line(f"[{'PASS' if ok else 'FAIL'}] criterion {number}: {title}")
