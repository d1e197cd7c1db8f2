"""Acceptance criteria, each run at its exact scope and time budget.

Every criterion records one PASS/FAIL line; the lines are printed at the end
of the pytest session (see ``conftest.py``) or directly when this file is run
as a script.  Equality is exact throughout.
"""

from __future__ import annotations

import random
import sys
import time

import pytest

from weylcsm import bott_samelson
from weylcsm.cartan import CartanDatum
from weylcsm.constants import c_ssm, euler_characteristic
from weylcsm.symfunc import RatFunc
from weylcsm.verify import (
    TYPES_BY_RANK,
    Check,
    check_bs_exhaustive,
    check_bs_random,
    check_duality,
    check_euler_limits,
    check_hecke,
    check_operators,
    check_oracle,
    check_parabolic,
    check_restriction,
    check_stable,
    check_telescoping,
    check_word_independence,
)
from weylcsm.weyl import WeylGroup

SEED = 20240611
RESULTS: dict[int, str] = {}


def _groups(*names: str) -> list[WeylGroup]:
    return [WeylGroup.of_type(n) for n in names]


def _record(number: int, title: str, budget: float, checks: list[Check], elapsed: float) -> None:
    ok = all(c.passed for c in checks) and elapsed < budget
    total = sum(c.count for c in checks)
    status = "PASS" if ok else "FAIL"
    line = f"[{status}] criterion {number:2d}: {title} ({total} checks, {elapsed:.2f}s < {budget:.0f}s)"
    if not ok:
        bad = [c.line() for c in checks if not c.passed]
        if elapsed >= budget:
            bad.append(f"time budget exceeded: {elapsed:.2f}s")
        line += "\n      " + "\n      ".join(bad)
    RESULTS[number] = line
    assert ok, line


def _run(number: int, title: str, budget: float, body) -> None:
    bott_samelson.clear_caches()
    t0 = time.perf_counter()
    checks = body()
    _record(number, title, budget, checks, time.perf_counter() - t0)


def test_criterion_01_sl3_example():
    def body():
        g = WeylGroup.of_type("A2")
        s1, s2 = g.simple
        a1, a2 = RatFunc.var(0, 2), RatFunc.var(1, 2)
        chk = Check("sl3", "worked SL(3) example")
        c = c_ssm(g, s1, s2, g.longest)
        chk.expect(c == RatFunc.constant(2, -2) / ((1 + a1) * (1 + a2) * (1 + a1 + a2)), str(c))
        chk.expect(euler_characteristic(g, s1, s2, g.longest) == -2, "limit")
        return [chk]

    _run(1, "SL(3) example and its limit -2", 1, body)


def test_criterion_02_oracle_equivalence():
    _run(2, "operator formula = localization oracle, A2 and B2", 120, lambda: [check_oracle(g) for g in _groups("A2", "B2")])


def test_criterion_03_duality():
    _run(3, "duality pairing is the identity, A2 and B2", 60, lambda: [check_duality(g) for g in _groups("A2", "B2")])


def test_criterion_04_bott_samelson_formula_vs_recursion():
    def body():
        rng = random.Random(SEED)
        out: list[Check] = []
        data = [CartanDatum.from_type(t) for t in TYPES_BY_RANK[2]]
        for d in data:
            out.extend(check_bs_exhaustive(d, 4))
        per_type = [100 // len(data) + (k < 100 % len(data)) for k in range(len(data))]
        for d, n in zip(data, per_type):
            out.append(check_bs_random(d, rng, n, 6))
        return out

    _run(4, "Bott-Samelson closed form = recursion, rank 2, |Q| <= 4 plus 100 random |Q| <= 6", 300, body)


def test_criterion_05_telescoping():
    def body():
        data = [CartanDatum.from_type(t) for r in (1, 2, 3) for t in TYPES_BY_RANK[r]]
        return [check_telescoping(data, 5)]

    _run(5, "telescoping identity equals 1, rank <= 3, |Q| <= 5", 120, body)


def test_criterion_06_restriction():
    _run(6, "c_{u,w}^w = closed-form restriction, A2 and B2", 60, lambda: [check_restriction(g) for g in _groups("A2", "B2")])


def test_criterion_07_operator_algebra():
    def body():
        rng = random.Random(SEED)
        out: list[Check] = []
        for g in _groups("A2", "B2", "A3"):
            out.extend(check_operators(g.datum, rng, 100))
            out.extend(check_hecke(g, rng, 100))
        return out

    _run(7, "operator relations and adjointness, ranks 2-3, 100 samples each", 60, body)


def test_criterion_08_csm_constants():
    _run(8, "d = CSM oracle expansion and polynomial of degree <= 3, A2", 120, lambda: check_stable(WeylGroup.of_type("A2"))[:2])


def test_criterion_09_stable_constants():
    _run(9, "e homogeneous of degree 3 and e|_(h=1) = -d, A2", 60, lambda: check_stable(WeylGroup.of_type("A2"))[2:3])


def test_criterion_10_parabolic():
    def body():
        a2, a3 = _groups("A2", "A3")
        out = check_parabolic(a2, (1,)) + check_parabolic(a2, (2,))
        out += check_parabolic(a3, (1, 3), random.Random(SEED), 20)
        return out

    _run(10, "G/P constants = G/P oracle and lift independence, A2 {1},{2}, A3 {1,3}", 300, body)


def test_criterion_11_reduced_word_independence():
    _run(11, "c_{u,v}^w independent of reduced word, A2 and B2", 120, lambda: [check_word_independence(g)[0] for g in _groups("A2", "B2")])


def test_criterion_12_integer_euler_limits():
    _run(12, "Euler limits are integers, A2 and B2", 60, lambda: [check_euler_limits(g) for g in _groups("A2", "B2")])


if __name__ == "__main__":
    sys.exit(pytest.main([__file__, "-q"]))
