import random

import pytest

from weylcsm.verify import SUITES, Check, random_ratfunc, run_suite


def test_check_line_reports_failures():
    chk = Check("demo", "x = x")
    chk.expect(True, "a")
    assert chk.passed and chk.line() == "PASS  demo: x = x [1 checked]"
    chk.expect(False, "b")
    assert not chk.passed and "first failure: b" in chk.line()


def test_random_ratfunc_is_seeded():
    assert random_ratfunc(random.Random(5), 2) == random_ratfunc(random.Random(5), 2)


@pytest.mark.parametrize("suite", ["duality", "oracle", "parabolic", "stable"])
def test_small_suites_pass(suite):
    checks = run_suite(suite, ["A2"])
    assert checks and all(c.passed for c in checks)


def test_bott_samelson_suite_small():
    checks = run_suite("bott-samelson", ["A2"], seed=7, max_len=3, samples=20)
    assert all(c.passed for c in checks)


def test_unknown_suite():
    assert "all" in SUITES
    with pytest.raises(ValueError):
        run_suite("nope")
