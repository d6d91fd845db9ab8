import random
from fractions import Fraction

import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

settings.register_profile("default", max_examples=60, deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")

nonzero_rationals = st.builds(
    Fraction,
    st.integers(-10, 10).filter(bool),
    st.integers(1, 4),
)
small_rationals = st.builds(Fraction, st.integers(-12, 12), st.integers(1, 4))
positive_rationals = st.builds(Fraction, st.integers(1, 10), st.integers(1, 4))


def b_vectors(min_size=1, max_size=8):
    return st.lists(nonzero_rationals, min_size=min_size, max_size=max_size)


def rand_nonzero(rng: random.Random, lo=-10, hi=10, den=4) -> Fraction:
    while True:
        x = Fraction(rng.randint(lo, hi), rng.randint(1, den))
        if x:
            return x


@pytest.fixture
def rng():
    return random.Random(20261016)


# ---------------------------------------------------------------- acceptance report

_ACCEPTANCE: dict = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title): acceptance criterion")


def pytest_runtest_logreport(report):
    if "test_acceptance" not in report.nodeid:
        return
    if report.when == "call" or report.failed:
        prev = _ACCEPTANCE.get(report.nodeid)
        if prev is None or prev[0] == "passed":
            _ACCEPTANCE[report.nodeid] = (report.outcome, report.duration)


def pytest_collection_modifyitems(items):
    for item in items:
        m = item.get_closest_marker("criterion")
        if m:
            item.user_properties.append(("criterion", m.args))
            _TITLES[item.nodeid] = m.args


_TITLES: dict = {}


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for nodeid, (num, title) in sorted(_TITLES.items(), key=lambda kv: kv[1][0]):
        if nodeid not in _ACCEPTANCE:
            continue
        outcome, dur = _ACCEPTANCE[nodeid]
        word = "PASS" if outcome == "passed" else "FAIL"
        terminalreporter.write_line(f"criterion {num:>2} {word}  {title}  ({dur:.2f} s)")
