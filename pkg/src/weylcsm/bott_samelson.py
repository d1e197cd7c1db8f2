"""Bott-Samelson combinatorics over a word ``Q``.

Fixed points of ``BS^Q`` are the subwords of ``Q``.  Subwords are handled
internally as bit masks (bit ``k`` is position ``k`` of ``Q``); the public
functions also accept :class:`~weylcsm.weyl.Subword`.  "Earlier" always means
an earlier position in ``Q``, never a smaller letter.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, Mapping, Sequence

from .cartan import CartanDatum, Weight
from .io import ratfunc_to_json
from .symfunc import Atom, RatFunc, apply_operator_word, reflect, rsum, tvee
from .weyl import Subword, Word


def _bits(x: "Subword | int") -> int:
    return x.bits if isinstance(x, Subword) else int(x)


def _mask_str(bits: int, n: int) -> str:
    return "".join(str((bits >> k) & 1) for k in range(n))


def _submasks(mask: int) -> Iterator[int]:
    """All submasks of ``mask``, from ``mask`` down to 0."""
    sub = mask
    while True:
        yield sub
        if sub == 0:
            return
        sub = (sub - 1) & mask


def compress(bits: int, within: int) -> int:
    """Re-index ``bits`` (a submask of ``within``) along the positions of ``within``."""
    out = 0
    k = 0
    pos = 0
    while within >> pos:
        if (within >> pos) & 1:
            if (bits >> pos) & 1:
                out |= 1 << k
            k += 1
        pos += 1
    return out


def restrict_word(word: Word, within: int) -> Word:
    return tuple(q for k, q in enumerate(word) if (within >> k) & 1)


# -- memoized kernels, keyed by (datum, letters, masks) ----------------------


@lru_cache(maxsize=None)
def _tangent(datum: CartanDatum, word: Word, fixed: int) -> tuple[Weight, ...]:
    out = []
    for i, q in enumerate(word):
        lam = tuple(-int(j == q - 1) for j in range(datum.rank))
        for j in range(i, -1, -1):
            if (fixed >> j) & 1:
                lam = datum.reflect(word[j], lam)
        out.append(lam)
    return tuple(out)


@lru_cache(maxsize=None)
def _euler(datum: CartanDatum, word: Word, fixed: int) -> RatFunc:
    out = RatFunc.one(datum.rank)
    for lam in _tangent(datum, word, fixed):
        out = out * RatFunc.weight(lam, datum.rank)
    return out


@lru_cache(maxsize=None)
def _dual(datum: CartanDatum, word: Word, s: int, r: int) -> RatFunc:
    n = datum.rank
    if s & ~r:
        return RatFunc.zero(n)
    f = RatFunc.one(n)
    for k in range(len(word) - 1, -1, -1):
        if not (r >> k) & 1:
            continue
        q = word[k]
        alpha = RatFunc.weight(datum.simple_root(q), n)
        coef = (alpha if (s >> k) & 1 else RatFunc.one(n)) / (1 + alpha)
        f = coef * reflect(datum, q, f)
    return f


@lru_cache(maxsize=None)
def theorem_word_value(datum: CartanDatum, letters: Word, states: tuple[int, ...]) -> RatFunc:
    """Value at 1 of the product of atoms ``alpha^[2]/(1+alpha) s (-T^vee)^[0]``.

    ``states[k]`` is 2 for a position in both subwords, 1 for exactly one and
    0 for neither.  Memoized on suffixes, so evaluating many subword pairs of
    the same word shares work.
    """
    n = datum.rank
    if not letters:
        return RatFunc.one(n)
    f = theorem_word_value(datum, letters[1:], states[1:])
    q, st = letters[0], states[0]
    if st == 0:
        f = -tvee(datum, q, f)
    f = reflect(datum, q, f)
    alpha = RatFunc.weight(datum.simple_root(q), n)
    return (alpha if st == 2 else RatFunc.one(n)) / (1 + alpha) * f


def states_of(r: int, s: int, length: int) -> tuple[int, ...]:
    return tuple(((r >> k) & 1) + ((s >> k) & 1) for k in range(length))


_recursion_memo: dict[tuple[CartanDatum, Word, int, int], RatFunc] = {}


def _b_rec(datum: CartanDatum, word: Word, r: int, s: int) -> RatFunc:
    key = (datum, word, r, s)
    hit = _recursion_memo.get(key)
    if hit is not None:
        return hit
    full = (1 << len(word)) - 1
    base = r | s
    head = _dual(datum, word, r, full) * _dual(datum, word, s, full)
    terms = [head]
    for extra in _submasks(full & ~base):
        j = base | extra
        if j == full:
            continue
        sub = restrict_word(word, j)
        b = _b_rec(datum, sub, compress(r, j), compress(s, j))
        if not b.is_zero():
            terms.append(-(b * _dual(datum, word, j, full)))
    val = rsum(terms, datum.rank) / _dual(datum, word, full, full)
    _recursion_memo[key] = val
    return val


def clear_caches() -> None:
    _recursion_memo.clear()
    for fn in (_tangent, _euler, _dual, theorem_word_value, _reduced_step):
        fn.cache_clear()


# -- public API ---------------------------------------------------------------


@dataclass(frozen=True)
class BSClass:
    word: Word
    restrictions: Mapping[int, RatFunc]

    def __getitem__(self, sub: "Subword | int") -> RatFunc:
        return self.restrictions[_bits(sub)]

    def __add__(self, other: "BSClass") -> "BSClass":
        return BSClass(self.word, {k: f + other.restrictions[k] for k, f in self.restrictions.items()})

    def __sub__(self, other: "BSClass") -> "BSClass":
        return BSClass(self.word, {k: f - other.restrictions[k] for k, f in self.restrictions.items()})

    def scale(self, c: RatFunc | int) -> "BSClass":
        return BSClass(self.word, {k: f * c for k, f in self.restrictions.items()})

    def to_json(self) -> dict[str, object]:
        n = len(self.word)
        return {_mask_str(k, n): ratfunc_to_json(f) for k, f in sorted(self.restrictions.items())}


class BottSamelson:
    """Localization data of ``BS^Q`` for a fixed word ``Q`` (reduced or not)."""

    def __init__(self, datum: CartanDatum, word: Sequence[int]) -> None:
        self.datum = datum
        self.word: Word = tuple(word)
        for q in self.word:
            if not 1 <= q <= datum.rank:
                raise ValueError(f"letter {q} out of range 1..{datum.rank}")
        self.length = len(self.word)
        self.full = (1 << self.length) - 1
        self.nvars = datum.rank

    def subwords(self) -> list[Subword]:
        return [Subword.from_bits(self.word, b) for b in range(self.full + 1)]

    def _check(self, *subs: int) -> None:
        for b in subs:
            if b & ~self.full:
                raise ValueError(f"mask {b:b} is not a subword of a word of length {self.length}")

    def tangent_weights(self, fixed: "Subword | int") -> list[Weight]:
        """``(prod_{j in J, j <= i} s_j)(-alpha_i)`` for each position ``i``."""
        b = _bits(fixed)
        self._check(b)
        return list(_tangent(self.datum, self.word, b))

    def euler_class(self, fixed: "Subword | int") -> RatFunc:
        return _euler(self.datum, self.word, _bits(fixed))

    def dual_restriction(self, s: "Subword | int", r: "Subword | int") -> RatFunc:
        """``T_S|_R``; zero unless ``S`` is contained in ``R``."""
        sb, rb = _bits(s), _bits(r)
        self._check(sb, rb)
        return _dual(self.datum, self.word, sb, rb)

    def csm_bs_restriction(self, j: "Subword | int", r: "Subword | int") -> RatFunc:
        """``c^T_SM(BS^J)|_R``: ``(1 + t)`` along ``J`` and ``t`` normal to it."""
        jb, rb = _bits(j), _bits(r)
        self._check(jb, rb)
        if rb & ~jb:
            return RatFunc.zero(self.nvars)
        out = RatFunc.one(self.nvars)
        for k, lam in enumerate(_tangent(self.datum, self.word, rb)):
            t = RatFunc.weight(lam, self.nvars)
            out = out * ((1 + t) if (jb >> k) & 1 else t)
        return out

    def dual_class(self, s: "Subword | int") -> BSClass:
        sb = _bits(s)
        return BSClass(self.word, {r: self.dual_restriction(sb, r) for r in range(self.full + 1)})

    def closure_class(self, j: "Subword | int") -> BSClass:
        jb = _bits(j)
        return BSClass(self.word, {r: self.csm_bs_restriction(jb, r) for r in range(self.full + 1)})

    def cell_class(self, j: "Subword | int") -> BSClass:
        """Open cell by inclusion-exclusion over the closures of its faces."""
        jb = _bits(j)
        out: dict[int, list[RatFunc]] = {r: [] for r in range(self.full + 1)}
        for sb in _submasks(jb):
            sign = -1 if bin(jb & ~sb).count("1") % 2 else 1
            for r in _submasks(sb):
                v = self.csm_bs_restriction(sb, r)
                out[r].append(v if sign > 0 else -v)
        return BSClass(self.word, {r: rsum(v, self.nvars) for r, v in out.items()})

    def bs_pairing(self, g1: BSClass, g2: BSClass) -> RatFunc:
        if g1.word != self.word or g2.word != self.word:
            raise ValueError("classes belong to a different word")
        terms = []
        for r in range(self.full + 1):
            a, b = g1.restrictions[r], g2.restrictions[r]
            if not a.is_zero() and not b.is_zero():
                terms.append(a * b / self.euler_class(r))
        return rsum(terms, self.nvars)

    def operator_word(self, r: "Subword | int", s: "Subword | int") -> list[Atom]:
        rb, sb = _bits(r), _bits(s)
        n = self.nvars
        ops: list[Atom] = []
        for k, q in enumerate(self.word):
            alpha = RatFunc.weight(self.datum.simple_root(q), n)
            both = (rb >> k) & (sb >> k) & 1
            ops.append(Atom("mul", value=(alpha if both else RatFunc.one(n)) / (1 + alpha)))
            ops.append(Atom("s", q))
            if not ((rb | sb) >> k) & 1:
                ops.append(Atom("mul", value=RatFunc.constant(n, -1)))
                ops.append(Atom("tv", q))
        return ops

    def b_formula(self, r: "Subword | int", s: "Subword | int") -> RatFunc:
        """``b^Q_{R,S}`` from the closed operator formula."""
        rb, sb = _bits(r), _bits(s)
        self._check(rb, sb)
        return apply_operator_word(self.datum, self.operator_word(rb, sb), RatFunc.one(self.nvars))

    def b_memo(self, r: "Subword | int", s: "Subword | int") -> RatFunc:
        """Same value as :meth:`b_formula`, through the shared suffix memo."""
        rb, sb = _bits(r), _bits(s)
        self._check(rb, sb)
        return theorem_word_value(self.datum, self.word, states_of(rb, sb, self.length))

    def b_recursion(self, r: "Subword | int", s: "Subword | int") -> RatFunc:
        """``b^Q_{R,S}`` by restricting ``T_R T_S = sum_J b^J T_J`` to the point ``Q``."""
        rb, sb = _bits(r), _bits(s)
        self._check(rb, sb)
        return _b_rec(self.datum, self.word, rb, sb)

    def reduced_step_identity(self, s: "Subword | int", j: "Subword | int") -> RatFunc:
        """``sum_{S <= R <= J} prod_{J-R}(1 + t_j(R)) / prod_{J-S} t_j(R)``; equals 1."""
        sb, jb = _bits(s), _bits(j)
        self._check(sb, jb)
        if sb & ~jb:
            raise ValueError("S must be contained in J")
        sub_word = restrict_word(self.word, jb)
        cs = compress(sb, jb)
        full = (1 << len(sub_word)) - 1
        return _reduced_step(self.datum, sub_word, cs, full)

    def peel_first_letter(self, s: "Subword | int", r: "Subword | int") -> RatFunc:
        """``T_S|_R`` rebuilt from the word with its first letter removed."""
        sb, rb = _bits(s), _bits(r)
        if self.length == 0:
            return self.dual_restriction(sb, rb)
        rest = BottSamelson(self.datum, self.word[1:])
        inner = rest.dual_restriction(sb >> 1, rb >> 1)
        if not rb & 1:
            return RatFunc.zero(self.nvars) if sb & 1 else inner
        q = self.word[0]
        alpha = RatFunc.weight(self.datum.simple_root(q), self.nvars)
        coef = (alpha if sb & 1 else RatFunc.one(self.nvars)) / (1 + alpha)
        return coef * reflect(self.datum, q, inner)


@lru_cache(maxsize=None)
def _reduced_step(datum: CartanDatum, word: Word, s: int, full: int) -> RatFunc:
    n = datum.rank
    terms = []
    for extra in _submasks(full & ~s):
        r = s | extra
        t = [RatFunc.weight(lam, n) for lam in _tangent(datum, word, r)]
        num = RatFunc.one(n)
        den = RatFunc.one(n)
        for k in range(len(word)):
            if not (r >> k) & 1:
                num = num * (1 + t[k])
            if not (s >> k) & 1:
                den = den * t[k]
        terms.append(num / den)
    return rsum(terms, n)


def subword_pairs(length: int) -> Iterator[tuple[int, int]]:
    full = 1 << length
    for r in range(full):
        for s in range(full):
            yield r, s

