"""Pure-Python polynomial kernels.

Polynomials are ``dict[int, int]`` mapping a packed monomial key to a nonzero
integer coefficient.  Variable ``j`` of ``n`` occupies bits
``[BITS*(n-1-j), BITS*(n-j))`` so integer order on keys is lex order with
variable 0 most significant.  Monomial multiplication is key addition.

This module and ``_ckernels.pyx`` implement the same functions with the same
signatures; ``weylcsm.kernels`` picks one at import.
"""

from __future__ import annotations

import heapq
from math import gcd

BITS = 16
MASK = (1 << BITS) - 1

BACKEND = "python"


def mul(a: dict, b: dict) -> dict:
    if len(a) < len(b):
        a, b = b, a
    out: dict = {}
    get = out.get
    for kb, cb in b.items():
        for ka, ca in a.items():
            k = ka + kb
            out[k] = get(k, 0) + ca * cb
    return {k: c for k, c in out.items() if c}


def lincomb(a: dict, ca: int, b: dict, cb: int) -> dict:
    """Return ``ca*a + cb*b``."""
    out = {k: ca * c for k, c in a.items()} if ca != 1 else dict(a)
    get = out.get
    for k, c in b.items():
        out[k] = get(k, 0) + cb * c
    return {k: c for k, c in out.items() if c}


def scale(a: dict, c: int) -> dict:
    if c == 0:
        return {}
    return {k: c * v for k, v in a.items()}


def exact_div_int(a: dict, c: int) -> dict:
    return {k: v // c for k, v in a.items()}


def content(a: dict) -> int:
    g = 0
    for v in a.values():
        g = gcd(g, v)
        if g == 1:
            break
    return g


def div_linear(p: dict, lin: list, lead_shift: int) -> dict | None:
    """Exact quotient of ``p`` by a linear form, or ``None``.

    ``lin`` is a list of ``(key, coeff)`` sorted by descending key; its first
    entry is the leading (lex-largest) variable, whose exponent sits at
    ``lead_shift``.  Works over the integers: a primitive divisor of an integer
    polynomial leaves an integer quotient, so a non-integral step means the
    division is not exact.
    """
    lead_key, lead_c = lin[0]
    rest = lin[1:]
    rem = dict(p)
    heap = [-k for k in rem]
    heapq.heapify(heap)
    q: dict = {}
    while heap:
        k = -heapq.heappop(heap)
        c = rem.pop(k, 0)
        if c == 0:
            continue
        if not (k >> lead_shift) & MASK:
            return None
        t, r = divmod(c, lead_c)
        if r:
            return None
        tk = k - lead_key
        q[tk] = t
        for lk, lc in rest:
            nk = tk + lk
            if nk in rem:
                rem[nk] -= t * lc
            else:
                rem[nk] = -t * lc
                heapq.heappush(heap, -nk)
    return q


def substitute(p: dict, images: list, nvars: int) -> dict:
    """Apply the ring map ``x_j -> images[j]`` to ``p``.

    Terms are grouped by their exponent prefix so the partial products over
    the leading variables are shared.
    """
    if not p:
        return {}
    powers: list = [[{0: 1}] for _ in range(nvars)]

    def power(j: int, e: int) -> dict:
        row = powers[j]
        while len(row) <= e:
            row.append(mul(row[-1], images[j]))
        return row[e]

    shifts = [BITS * (nvars - 1 - j) for j in range(nvars)]
    prefix_cache: dict = {}

    def prefix(key: int, j: int) -> dict:
        # product over variables 0..j-1 of the monomial ``key`` (high bits only)
        if j == 0:
            return {0: 1}
        hk = key >> shifts[j - 1]
        cache_key = (j, hk)
        hit = prefix_cache.get(cache_key)
        if hit is not None:
            return hit
        e = hk & MASK
        base = prefix(key, j - 1)
        val = mul(base, power(j - 1, e)) if e else base
        prefix_cache[cache_key] = val
        return val

    out: dict = {}
    get = out.get
    last = nvars - 1
    for key, c in p.items():
        e = (key >> shifts[last]) & MASK
        part = prefix(key, last)
        if e:
            part = mul(part, power(last, e))
        for k, v in part.items():
            out[k] = get(k, 0) + c * v
    return {k: c for k, c in out.items() if c}


def negate_odd(p: dict, nvars: int) -> dict:
    """Multiply each monomial by ``(-1)**degree``."""
    shifts = [BITS * (nvars - 1 - j) for j in range(nvars)]
    out = {}
    for k, c in p.items():
        d = 0
        for s in shifts:
            d += (k >> s) & MASK
        out[k] = -c if d & 1 else c
    return out
