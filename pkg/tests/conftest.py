import sys
import random

import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from weylcsm.cartan import CartanDatum
from weylcsm.symfunc import RatFunc
from weylcsm.weyl import WeylGroup

settings.register_profile(
    "default", deadline=None, max_examples=60, suppress_health_check=[HealthCheck.too_slow]
)
settings.load_profile("default")


@pytest.fixture(scope="session")
def A1():
    return WeylGroup.of_type("A1")


@pytest.fixture(scope="session")
def A2():
    return WeylGroup.of_type("A2")


@pytest.fixture(scope="session")
def B2():
    return WeylGroup.of_type("B2")


@pytest.fixture(scope="session")
def A3():
    return WeylGroup.of_type("A3")


@pytest.fixture
def rng():
    return random.Random(20240611)


def polys(nvars: int, max_terms: int = 4, max_deg: int = 3):
    """Hypothesis strategy: small integer polynomials as RatFunc."""
    mono = st.tuples(*[st.integers(0, max_deg)] * nvars)
    return st.dictionaries(mono, st.integers(-5, 5), max_size=max_terms).map(
        lambda d: RatFunc.from_terms(nvars, d)
    )


def ratfuncs(nvars: int):
    """Polynomial over a product of up to two ``(1 + l)`` factors."""
    lin = st.lists(st.integers(-2, 2), min_size=nvars, max_size=nvars).filter(any)

    def build(args):
        p, lins = args
        f = p
        for c in lins:
            f = f / RatFunc.linear(1, c, nvars)
        return f

    return st.tuples(polys(nvars), st.lists(lin, max_size=2)).map(build)


def datum(name: str) -> CartanDatum:
    return CartanDatum.from_type(name)


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance") or sys.modules.get("tests.test_acceptance")
    results = getattr(mod, "RESULTS", None)
    if not results:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(results):
        terminalreporter.write_line(results[number])
