"""Weyl group combinatorics.

Elements are integer matrices acting on the root lattice (column ``j`` is the
image of ``alpha_j`` in simple-root coordinates), so equality is canonical and
no word normalisation is needed.  Words are tuples of 1-based simple-root
indices; subwords are identified by positions.
"""

from __future__ import annotations

import itertools
from collections import deque
from dataclasses import dataclass
from functools import cached_property, lru_cache
from typing import Iterable, Iterator, Sequence

from .cartan import CartanDatum, CartanError, Weight

Word = tuple[int, ...]
Matrix = tuple[tuple[int, ...], ...]

DEFAULT_GROUP_CAP = 50_000


class WeylError(ValueError):
    pass


class WeylElement:
    """An element of the Weyl group of ``datum``."""

    __slots__ = ("matrix", "datum", "_length", "_hash")

    def __init__(self, matrix: Matrix, datum: CartanDatum) -> None:
        self.matrix = matrix
        self.datum = datum
        self._length: int | None = None
        self._hash = hash(matrix)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, WeylElement):
            return NotImplemented
        return self.matrix == other.matrix and (
            self.datum is other.datum or self.datum == other.datum
        )

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        return f"WeylElement({format_word(reduced_word(self)) or 'id'})"

    def __mul__(self, other: "WeylElement") -> "WeylElement":
        return multiply(self, other)

    def act(self, lam: Sequence[int]) -> Weight:
        m = self.matrix
        return tuple(sum(row[j] * lam[j] for j in range(len(lam))) for row in m)

    def column(self, j: int) -> Weight:
        """Image of the simple root ``alpha_{j+1}`` (0-based ``j``)."""
        return tuple(row[j] for row in self.matrix)

    @property
    def length(self) -> int:
        if self._length is None:
            self._length = sum(
                1 for beta in self.datum.positive_roots if _is_negative(self.act(beta))
            )
        return self._length

    def is_identity(self) -> bool:
        m = self.matrix
        return all(m[i][j] == (i == j) for i in range(len(m)) for j in range(len(m)))

    def inverse(self) -> "WeylElement":
        w = identity(self.datum)
        for i in reversed(reduced_word(self)):
            w = multiply(w, simple_reflection(self.datum, i))
        return w

    def has_right_descent(self, i: int) -> bool:
        """``l(w s_i) < l(w)``, i.e. ``w(alpha_i) < 0``."""
        return _is_negative(self.column(i - 1))

    def has_left_descent(self, i: int) -> bool:
        """``l(s_i w) < l(w)``."""
        return self.inverse().has_right_descent(i)


def _is_negative(lam: Sequence[int]) -> bool:
    return any(x < 0 for x in lam)


def identity(datum: CartanDatum) -> WeylElement:
    n = datum.rank
    return WeylElement(tuple(tuple(int(i == j) for j in range(n)) for i in range(n)), datum)


@lru_cache(maxsize=None)
def simple_reflection(datum: CartanDatum, i: int) -> WeylElement:
    if not 1 <= i <= datum.rank:
        raise WeylError(f"simple reflection index {i} out of range 1..{datum.rank}")
    cols = [datum.reflect(i, datum.simple_root(j)) for j in range(1, datum.rank + 1)]
    n = datum.rank
    return WeylElement(tuple(tuple(cols[j][r] for j in range(n)) for r in range(n)), datum)


def multiply(a: WeylElement, b: WeylElement) -> WeylElement:
    if a.datum is not b.datum and a.datum != b.datum:
        raise WeylError("cannot multiply elements of different Weyl groups")
    ma, mb = a.matrix, b.matrix
    n = len(ma)
    cols = range(n)
    return WeylElement(
        tuple(tuple(sum(ra[k] * mb[k][j] for k in cols) for j in cols) for ra in ma), a.datum
    )


def word_product(datum: CartanDatum, word: Iterable[int]) -> WeylElement:
    w = identity(datum)
    for i in word:
        w = multiply(w, simple_reflection(datum, i))
    return w


def reduced_word(w: WeylElement) -> Word:
    """Greedy reduced word: repeatedly strip the smallest left descent."""
    datum = w.datum
    out: list[int] = []
    cur = w
    while cur.length:
        for i in range(1, datum.rank + 1):
            nxt = multiply(simple_reflection(datum, i), cur)
            if nxt.length < cur.length:
                out.append(i)
                cur = nxt
                break
        else:  # pragma: no cover - every non-identity element has a descent
            raise WeylError("no descent found")
    return tuple(out)


def bruhat_leq(u: WeylElement, w: WeylElement) -> bool:
    """Bruhat order via the descent recursion.

    If ``s`` is a right descent of ``w`` then ``u <= w`` iff
    ``min(u, us) <= ws``.
    """
    if u.datum is not w.datum and u.datum != w.datum:
        raise WeylError("elements of different Weyl groups")
    return _bruhat_leq(u, w)


def _bruhat_leq(u: WeylElement, w: WeylElement) -> bool:
    while True:
        lu, lw = u.length, w.length
        if lu > lw:
            return False
        if lu == lw:
            return u == w
        if lu == 0:
            return True
        datum = w.datum
        for i in range(1, datum.rank + 1):
            if w.has_right_descent(i):
                s = simple_reflection(datum, i)
                w = multiply(w, s)
                if u.has_right_descent(i):
                    u = multiply(u, s)
                break


def demazure_product(datum: CartanDatum, word: Iterable[int]) -> WeylElement:
    """Fold letters from the left, absorbing a letter that would shorten."""
    w = identity(datum)
    for i in word:
        if not w.has_right_descent(i):
            w = multiply(w, simple_reflection(datum, i))
    return w


@dataclass(frozen=True)
class Subword:
    """Positions of a parent word, stored as a 0/1 mask."""

    word: Word
    mask: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.mask) != len(self.word):
            raise WeylError("mask length must equal word length")

    def __str__(self) -> str:
        return "".join(map(str, self.mask))

    @property
    def positions(self) -> tuple[int, ...]:
        return tuple(k for k, b in enumerate(self.mask) if b)

    @property
    def letters(self) -> Word:
        return tuple(self.word[k] for k in self.positions)

    @property
    def bits(self) -> int:
        return sum(1 << k for k, b in enumerate(self.mask) if b)

    @classmethod
    def from_bits(cls, word: Sequence[int], bits: int) -> "Subword":
        word = tuple(word)
        return cls(word, tuple((bits >> k) & 1 for k in range(len(word))))

    @classmethod
    def from_string(cls, word: Sequence[int], mask: str) -> "Subword":
        return cls(tuple(word), tuple(int(c) for c in mask))

    def product(self, datum: CartanDatum) -> WeylElement:
        return word_product(datum, self.letters)


def subwords_with_product(datum: CartanDatum, word: Sequence[int], target: WeylElement) -> list[Subword]:
    """All subwords of ``word`` whose letters multiply to ``target``.

    Masks come out in lexicographic order of their 0/1 strings.  Prefix
    products are shared along the enumeration tree and branches that can no
    longer reach ``target`` (too few letters left) are pruned.
    """
    word = tuple(word)
    n = len(word)
    tl = target.length
    reflections = [simple_reflection(datum, i) for i in range(1, datum.rank + 1)]
    out: list[Subword] = []
    mask = [0] * n

    def walk(pos: int, prefix: WeylElement) -> None:
        if prefix.length - (n - pos) > tl or prefix.length + (n - pos) < tl:
            return
        if pos == n:
            if prefix == target:
                out.append(Subword(word, tuple(mask)))
            return
        mask[pos] = 0
        walk(pos + 1, prefix)
        mask[pos] = 1
        walk(pos + 1, multiply(prefix, reflections[word[pos] - 1]))
        mask[pos] = 0

    walk(0, identity(datum))
    return out


def parse_word(text: str, rank: int | None = None) -> Word:
    """Parse ``"1,2,1"`` or the shorthand ``"121"`` (rank <= 9).

    >>> parse_word("1,2,1"), parse_word("121"), parse_word("")
    ((1, 2, 1), (1, 2, 1), ())
    """
    s = text.strip()
    if s in ("", "id", "e"):
        return ()
    if "," in s:
        parts = s.split(",")
        out = []
        pos = 0
        for p in parts:
            p_s = p.strip()
            if not p_s.isdigit():
                raise WeylError(f"bad letter {p_s!r} at position {pos} in word {text!r}")
            out.append(int(p_s))
            pos += len(p) + 1
        word = tuple(out)
    else:
        if rank is not None and rank > 9:
            raise WeylError("single-digit shorthand needs rank <= 9; use commas")
        for pos, ch in enumerate(s):
            if not ch.isdigit():
                raise WeylError(f"bad character {ch!r} at position {pos} in word {text!r}")
        word = tuple(int(ch) for ch in s)
    if rank is not None:
        for pos, i in enumerate(word):
            if not 1 <= i <= rank:
                raise WeylError(f"letter {i} at index {pos} out of range 1..{rank}")
    return word


def format_word(word: Sequence[int]) -> str:
    return ",".join(map(str, word))


class WeylGroup:
    """The finite Weyl group of a Cartan datum, enumerated once.

    Elements are listed by increasing length with ties broken by their greedy
    reduced words (lexicographic).
    """

    def __init__(self, datum: CartanDatum, cap: int = DEFAULT_GROUP_CAP) -> None:
        self.datum = datum
        self.rank = datum.rank
        self.cap = cap
        self.one = identity(datum)
        self.simple = [simple_reflection(datum, i) for i in range(1, datum.rank + 1)]
        self._elements = self._enumerate()
        self._word = {w: reduced_word(w) for w in self._elements}
        self._elements.sort(key=lambda w: (w.length, self._word[w]))
        self._index = {w: k for k, w in enumerate(self._elements)}
        self._leq_cache: dict[tuple[int, int], bool] = {}

    @classmethod
    def of_type(cls, name: str) -> "WeylGroup":
        return cls(CartanDatum.from_type(name))

    def _enumerate(self) -> list[WeylElement]:
        seen = {self.one}
        order = [self.one]
        queue = deque([self.one])
        while queue:
            w = queue.popleft()
            for s in self.simple:
                x = multiply(s, w)
                if x not in seen:
                    seen.add(x)
                    order.append(x)
                    queue.append(x)
                    if len(seen) > self.cap:
                        raise CartanError(
                            f"Weyl group has more than {self.cap} elements; raise the cap"
                        )
        return order

    def __len__(self) -> int:
        return len(self._elements)

    def __iter__(self) -> Iterator[WeylElement]:
        return iter(self._elements)

    @property
    def elements(self) -> list[WeylElement]:
        return list(self._elements)

    def index(self, w: WeylElement) -> int:
        return self._index[w]

    def word(self, w: WeylElement) -> Word:
        return self._word[w]

    def key(self, w: WeylElement) -> tuple[int, Word]:
        return (w.length, self._word[w])

    def element(self, word: Sequence[int]) -> WeylElement:
        return word_product(self.datum, word)

    def parse(self, text: str) -> WeylElement:
        return self.element(parse_word(text, self.rank))

    @cached_property
    def longest(self) -> WeylElement:
        return self._elements[-1]

    def leq(self, u: WeylElement, w: WeylElement) -> bool:
        k = (self._index[u], self._index[w])
        hit = self._leq_cache.get(k)
        if hit is None:
            hit = self._leq_cache[k] = _bruhat_leq(u, w)
        return hit

    def reduced_words(self, w: WeylElement) -> list[Word]:
        """Every reduced word of ``w``, lexicographically sorted."""
        out: list[Word] = []

        def go(x: WeylElement, suffix: Word) -> None:
            if x.length == 0:
                out.append(suffix)
                return
            for i in range(1, self.rank + 1):
                if x.has_right_descent(i):
                    go(multiply(x, self.simple[i - 1]), (i,) + suffix)

        go(w, ())
        return sorted(out)

    def parabolic_subgroup(self, parabolic: Iterable[int]) -> list[WeylElement]:
        gens = sorted(set(parabolic))
        for i in gens:
            if not 1 <= i <= self.rank:
                raise WeylError(f"parabolic index {i} out of range")
        gset = set(gens)
        out = [w for w in self._elements if set(self._word[w]) <= gset]
        return out

    def minimal_representatives(self, parabolic: Iterable[int]) -> list[WeylElement]:
        """``W^P``: elements sending every ``alpha_i`` (i in P) to a positive root."""
        gens = sorted(set(parabolic))
        for i in gens:
            if not 1 <= i <= self.rank:
                raise WeylError(f"parabolic index {i} out of range")
        return [w for w in self._elements if all(not w.has_right_descent(i) for i in gens)]

    def minimal_representative(self, w: WeylElement, parabolic: Iterable[int]) -> WeylElement:
        """The minimal-length element of the coset ``w W_P``."""
        gens = sorted(set(parabolic))
        changed = True
        while changed:
            changed = False
            for i in gens:
                if w.has_right_descent(i):
                    w = multiply(w, self.simple[i - 1])
                    changed = True
        return w


def minimal_representatives(datum: CartanDatum, parabolic: Iterable[int]) -> list[WeylElement]:
    return WeylGroup(datum).minimal_representatives(parabolic)


def all_words(rank: int, max_length: int) -> Iterator[Word]:
    """Every word over ``1..rank`` of length ``<= max_length``, shortest first."""
    for n in range(max_length + 1):
        yield from itertools.product(range(1, rank + 1), repeat=n)
