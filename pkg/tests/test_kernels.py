"""Both polynomial backends must agree exactly."""

import os
import subprocess
import sys

import pytest
from hypothesis import given
from hypothesis import strategies as st

from weylcsm import _pykernels, kernels
from weylcsm.symfunc import _linear_divisor, _shift, pack

try:
    from weylcsm import _ckernels
except ImportError:
    _ckernels = None

BACKENDS = [_pykernels] + ([_ckernels] if _ckernels is not None else [])
N = 3

polys = st.dictionaries(
    st.tuples(*[st.integers(0, 4)] * N).map(pack), st.integers(-20, 20).filter(bool), max_size=12
)


def test_backend_selected():
    assert kernels.BACKEND in ("python", "cython")
    if _ckernels is not None and not os.environ.get("WEYLCSM_PURE"):
        assert kernels.BACKEND == "cython"


def test_pure_flag_forces_python():
    code = "from weylcsm.kernels import BACKEND; print(BACKEND)"
    env = dict(os.environ, WEYLCSM_PURE="1")
    out = subprocess.run([sys.executable, "-c", code], env=env, capture_output=True, text=True, check=True)
    assert out.stdout.strip() == "python"


@pytest.mark.skipif(_ckernels is None, reason="compiled kernels not built")
@given(polys, polys, st.integers(-5, 5))
def test_arith_agree(a, b, c):
    assert _ckernels.mul(a, b) == _pykernels.mul(a, b)
    assert _ckernels.lincomb(a, c, b, 2) == _pykernels.lincomb(a, c, b, 2)
    assert _ckernels.scale(a, c) == _pykernels.scale(a, c)
    assert _ckernels.content(a) == _pykernels.content(a)
    assert _ckernels.negate_odd(a, N) == _pykernels.negate_odd(a, N)


@pytest.mark.parametrize("k", BACKENDS, ids=lambda m: m.BACKEND)
@given(p=polys, lin=st.tuples(st.integers(-2, 2), st.integers(-2, 2), st.integers(-2, 2), st.integers(-2, 2)))
def test_div_linear_exact(k, p, lin):
    if not any(lin[1:]):
        return
    from weylcsm.symfunc import canonical_linear

    _, canon = canonical_linear(lin)
    divisor, lead = _linear_divisor(canon)
    lin_poly = {0: canon[0]} if canon[0] else {}
    for j, c in enumerate(canon[1:]):
        if c:
            lin_poly[1 << _shift(N, j)] = c
    prod = k.mul(p, lin_poly)
    assert k.div_linear(prod, divisor, lead) == p
    if p:
        bumped = k.lincomb(prod, 1, {0: 1}, 1)
        q = k.div_linear(bumped, divisor, lead)
        assert q is None or k.mul(q, lin_poly) == bumped


@pytest.mark.parametrize("k", BACKENDS, ids=lambda m: m.BACKEND)
@given(p=polys)
def test_substitute_identity_and_swap(k, p):
    ident = [{1 << _shift(N, j): 1} for j in range(N)]
    assert k.substitute(p, ident, N) == p
    neg = [{1 << _shift(N, j): -1} for j in range(N)]
    assert k.substitute(p, neg, N) == k.negate_odd(p, N)
