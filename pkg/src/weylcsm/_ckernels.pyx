# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled polynomial kernels; same contract as ``_pykernels``."""

import heapq
from math import gcd

DEF BITS = 16
cdef object MASK = (1 << BITS) - 1

BACKEND = "cython"


def mul(dict a, dict b):
    cdef dict out = {}
    cdef list ia, ib
    cdef Py_ssize_t i, j, na, nb
    cdef object ka, ca, kb, cb, k, prev
    if len(a) < len(b):
        a, b = b, a
    ia = list(a.items())
    ib = list(b.items())
    na = len(ia)
    nb = len(ib)
    for j in range(nb):
        kb, cb = ib[j]
        for i in range(na):
            ka, ca = ia[i]
            k = ka + kb
            prev = out.get(k)
            if prev is None:
                out[k] = ca * cb
            else:
                out[k] = prev + ca * cb
    return {k: ca for k, ca in out.items() if ca}


def lincomb(dict a, object ca, dict b, object cb):
    cdef dict out
    cdef object k, c, prev
    if ca == 1:
        out = dict(a)
    else:
        out = {k: ca * c for k, c in a.items()}
    for k, c in b.items():
        prev = out.get(k)
        if prev is None:
            out[k] = cb * c
        else:
            out[k] = prev + cb * c
    return {k: c for k, c in out.items() if c}


def scale(dict a, object c):
    if c == 0:
        return {}
    return {k: c * v for k, v in a.items()}


def exact_div_int(dict a, object c):
    return {k: v // c for k, v in a.items()}


def content(dict a):
    cdef object g = 0
    for v in a.values():
        g = gcd(g, v)
        if g == 1:
            break
    return g


def div_linear(dict p, list lin, int lead_shift):
    cdef object lead_key, lead_c, k, c, t, r, tk, nk, lk, lc
    cdef list rest, heap
    cdef dict rem, q
    cdef Py_ssize_t i, nrest
    lead_key, lead_c = lin[0]
    rest = lin[1:]
    nrest = len(rest)
    rem = dict(p)
    heap = [-k for k in rem]
    heapq.heapify(heap)
    q = {}
    while heap:
        k = -heapq.heappop(heap)
        c = rem.pop(k, 0)
        if c == 0:
            continue
        if not ((k >> lead_shift) & MASK):
            return None
        t, r = divmod(c, lead_c)
        if r:
            return None
        tk = k - lead_key
        q[tk] = t
        for i in range(nrest):
            lk, lc = rest[i]
            nk = tk + lk
            if nk in rem:
                rem[nk] = rem[nk] - t * lc
            else:
                rem[nk] = -t * lc
                heapq.heappush(heap, -nk)
    return q


def substitute(dict p, list images, int nvars):
    cdef list powers, shifts, row
    cdef dict prefix_cache, out, part
    cdef int j, last
    cdef object key, c, e, k, v, prev
    if not p:
        return {}
    powers = [[{0: 1}] for _ in range(nvars)]
    shifts = [BITS * (nvars - 1 - j) for j in range(nvars)]
    prefix_cache = {}

    def power(int j, object e):
        cdef list row = powers[j]
        while len(row) <= e:
            row.append(mul(row[len(row) - 1], images[j]))
        return row[e]

    def prefix(object key, int j):
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

    out = {}
    last = nvars - 1
    for key, c in p.items():
        e = (key >> shifts[last]) & MASK
        part = prefix(key, last)
        if e:
            part = mul(part, power(last, e))
        for k, v in part.items():
            prev = out.get(k)
            if prev is None:
                out[k] = c * v
            else:
                out[k] = prev + c * v
    return {k: c for k, c in out.items() if c}


def negate_odd(dict p, int nvars):
    cdef list shifts = [BITS * (nvars - 1 - j) for j in range(nvars)]
    cdef dict out = {}
    cdef object k, c, s
    cdef long d
    for k, c in p.items():
        d = 0
        for s in shifts:
            d += (k >> s) & MASK
        out[k] = -c if d & 1 else c
    return out
