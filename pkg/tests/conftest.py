from __future__ import annotations

import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from monocycles.exactalg import GF2, GF3, QQ
from monocycles.monomials import MonomialIdeal

settings.register_profile("default", deadline=None, suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")

FIELDS = [QQ, GF2, GF3]


@st.composite
def ideals(draw, n_min=2, n_max=4, max_exp=2, max_gens=5, min_degree=1):
    n = draw(st.integers(n_min, n_max))
    mono = st.tuples(*[st.integers(0, max_exp)] * n).filter(lambda u: sum(u) >= max(min_degree, 1))
    gens = draw(st.lists(mono, min_size=1, max_size=max_gens))
    return MonomialIdeal(n, gens)


@st.composite
def monomials(draw, n, max_exp=3):
    return tuple(draw(st.integers(0, max_exp)) for _ in range(n))


@st.composite
def subsets_of(draw, n, min_size=1, max_size=None):
    k = draw(st.integers(min_size, max_size or n))
    return tuple(sorted(draw(st.permutations(range(1, n + 1)))[:k]))


def parse(n, *gens) -> MonomialIdeal:
    return MonomialIdeal.parse(n, gens)


@pytest.fixture(scope="session")
def J():
    return parse(4, "x1*x3", "x1*x4", "x2*x3", "x2*x4")


@pytest.fixture(scope="session")
def I3():
    return parse(3, "x1*x3", "x2*x3")


# --- acceptance summary ------------------------------------------------------

_criteria: dict = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title): acceptance criterion covered by the test")


def pytest_runtest_logreport(report):
    marks = getattr(report, "_criterion", None)
    if marks is None:
        return
    number, title = marks
    ok = report.passed and not hasattr(report, "wasxfail") if report.when == "call" else not report.failed
    if report.when == "setup" and report.skipped and hasattr(report, "wasxfail"):
        ok = False
    entry = _criteria.setdefault(number, [title, True])
    entry[1] = entry[1] and ok


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    m = item.get_closest_marker("criterion")
    if m is not None:
        rep._criterion = (m.args[0], m.args[1])


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_criteria):
        title, ok = _criteria[number]
        terminalreporter.write_line(f"criterion {number:2d}: {'PASS' if ok else 'FAIL'}  {title}")
