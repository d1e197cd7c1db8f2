"""Compare the compiled and pure-Python polynomial kernels.

Runs each kernel on the same random inputs under both backends, checks the
outputs agree, and reports the best-of-N time.  The end-to-end section times
one realistic workload (all B2 structure constants plus the rank-2 closed
formula vs recursion sweep) in a subprocess per backend.

    python benchmarks/bench_kernels.py [--repeat 5] [--skip-e2e]
"""

from __future__ import annotations

import argparse
import os
import random
import subprocess
import sys
import timeit

from weylcsm import _pykernels
from weylcsm.symfunc import _linear_divisor, _shift, pack

try:
    from weylcsm import _ckernels
except ImportError:
    _ckernels = None

NVARS = 3


def random_poly(rng: random.Random, nterms: int, degree: int) -> dict:
    out = {}
    for _ in range(nterms):
        exps = [0] * NVARS
        for _ in range(rng.randint(0, degree)):
            exps[rng.randrange(NVARS)] += 1
        out[pack(exps)] = rng.randint(-9, 9) or 1
    return out


def cases(rng: random.Random) -> dict:
    a = random_poly(rng, 40, 6)
    b = random_poly(rng, 40, 6)
    lin = (1, 1, -1, 2)
    divisor, lead = _linear_divisor(lin)
    lin_poly = {0: 1, 1 << _shift(NVARS, 0): 1, 1 << _shift(NVARS, 1): -1, 1 << _shift(NVARS, 2): 2}
    product = _pykernels.mul(a, lin_poly)
    images = [
        {1 << _shift(NVARS, 0): -1},
        {1 << _shift(NVARS, 0): 1, 1 << _shift(NVARS, 1): 1},
        {1 << _shift(NVARS, 2): 1},
    ]
    return {
        "mul": (lambda k: k.mul(a, b)),
        "lincomb": (lambda k: k.lincomb(a, 3, b, -2)),
        "div_linear": (lambda k: k.div_linear(product, divisor, lead)),
        "substitute": (lambda k: k.substitute(a, images, NVARS)),
        "negate_odd": (lambda k: k.negate_odd(a, NVARS)),
    }


E2E = """
import time
from weylcsm.kernels import BACKEND
from weylcsm.verify import check_bs_exhaustive, check_oracle
from weylcsm.cartan import CartanDatum
from weylcsm.weyl import WeylGroup
t = time.perf_counter()
check_oracle(WeylGroup.of_type("B2"))
check_bs_exhaustive(CartanDatum.from_type("B2"), 4)
print(BACKEND, time.perf_counter() - t)
"""


def run_e2e(pure: bool) -> str:
    env = dict(os.environ)
    if pure:
        env["WEYLCSM_PURE"] = "1"
    else:
        env.pop("WEYLCSM_PURE", None)
    res = subprocess.run([sys.executable, "-c", E2E], env=env, capture_output=True, text=True, check=True)
    backend, seconds = res.stdout.split()
    return f"{backend:>8s} {float(seconds):8.2f} s"


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=5)
    ap.add_argument("--number", type=int, default=200)
    ap.add_argument("--skip-e2e", action="store_true")
    args = ap.parse_args()

    if _ckernels is None:
        print("compiled kernels not built; run `python setup.py build_ext --inplace`")
        backends = {"python": _pykernels}
    else:
        backends = {"python": _pykernels, "cython": _ckernels}

    rng = random.Random(1)
    print(f"{'kernel':<12}" + "".join(f"{name:>14}" for name in backends) + "   speedup")
    for name, fn in cases(rng).items():
        outs = [fn(k) for k in backends.values()]
        assert all(o == outs[0] for o in outs), f"{name}: backends disagree"
        times = [
            min(timeit.repeat(lambda k=k: fn(k), number=args.number, repeat=args.repeat)) / args.number
            for k in backends.values()
        ]
        speed = f"{times[0] / times[-1]:8.2f}x" if len(times) > 1 else ""
        print(f"{name:<12}" + "".join(f"{t * 1e6:12.1f}us" for t in times) + f"  {speed}")

    if not args.skip_e2e:
        print("\nend to end (B2 oracle + rank-2 formula/recursion sweep):")
        print(run_e2e(pure=True))
        if _ckernels is not None:
            print(run_e2e(pure=False))


if __name__ == "__main__":
    main()
