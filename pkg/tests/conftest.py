import random
from fractions import Fraction

import pytest
from hypothesis import assume, strategies as st

from qo_invariants import CharacteristicTuple, InvalidInputError, derivation_sequence, validate

SECTION6 = CharacteristicTuple.of(("2/7", "4/5"), ("5/14", 1), (2, "19/10"))


@pytest.fixture
def s6():
    return SECTION6


@pytest.fixture
def s6_seqs():
    return derivation_sequence(SECTION6, 1), derivation_sequence(SECTION6, 2)


def _try_tuple(a, b, strict=False):
    t = CharacteristicTuple(tuple(zip(sorted(a), sorted(b))))
    try:
        return validate(t, strict=strict)
    except InvalidInputError:
        return None


@st.composite
def branches(draw, max_e=4, bound=12, strict=False):
    """Valid tuples with e <= max_e and numerators/denominators in 1..bound."""
    e = draw(st.integers(1, max_e))
    frac = st.builds(Fraction, st.integers(1, bound), st.integers(1, bound))
    a = draw(st.lists(frac, min_size=e, max_size=e))
    b = draw(st.lists(frac, min_size=e, max_size=e))
    t = _try_tuple(a, b, strict)
    assume(t is not None)
    return t


def random_branches(count, seed=0, max_e=4, bound=12, strict=False):
    """Deterministic stream of ``count`` valid tuples."""
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        e = rng.randint(1, max_e)
        draw = lambda: [Fraction(rng.randint(1, bound), rng.randint(1, bound)) for _ in range(e)]
        t = _try_tuple(draw(), draw(), strict)
        if t is not None:
            out.append(t)
    return out


# acceptance summary: one line per criterion at the end of the run

_ACCEPTANCE = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "acceptance(number, title): an acceptance criterion")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    marker = item.get_closest_marker("acceptance")
    if marker is None or report.when != "call" and not report.failed:
        return
    number, title = marker.args
    passed = _ACCEPTANCE.get(number, (title, True))[1] and report.passed
    _ACCEPTANCE[number] = (title, passed)


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_ACCEPTANCE):
        title, passed = _ACCEPTANCE[number]
        terminalreporter.write_line(f"criterion {number}: {'PASS' if passed else 'FAIL'}  {title}")
