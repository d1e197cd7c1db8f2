"""Root-system data: Cartan matrices, simple reflections, positive roots.

Weights are integer tuples in the simple-root basis.  The Cartan matrix is read
with the convention ``s_i(alpha_j) = alpha_j - a[i][j] * alpha_i`` (1-based in
the public API, 0-based internally).
"""

from __future__ import annotations

import hashlib
import json
import re
from dataclasses import dataclass, field
from pathlib import Path
from typing import Sequence

Weight = tuple[int, ...]

DEFAULT_ROOT_CAP = 10_000


class CartanError(ValueError):
    """Invalid Cartan matrix or root-system request."""


@dataclass(frozen=True, eq=False)
class CartanDatum:
    """A finite crystallographic Cartan matrix and its positive roots.

    >>> d = CartanDatum.from_type("B2")
    >>> d.positive_roots
    ((0, 1), (1, 0), (1, 1), (2, 1))
    """

    cartan: tuple[tuple[int, ...], ...]
    name: str | None = None
    root_cap: int = DEFAULT_ROOT_CAP
    positive_roots: tuple[Weight, ...] = field(init=False, repr=False)

    def __post_init__(self) -> None:
        a = tuple(tuple(int(x) for x in row) for row in self.cartan)
        n = len(a)
        if n == 0 or any(len(row) != n for row in a):
            raise CartanError("Cartan matrix must be a non-empty square matrix")
        for i in range(n):
            if a[i][i] != 2:
                raise CartanError(f"diagonal entry a[{i + 1}][{i + 1}] must be 2")
            for j in range(n):
                if i != j and (a[i][j] > 0 or (a[i][j] == 0) != (a[j][i] == 0)):
                    raise CartanError(f"bad off-diagonal pair at ({i + 1},{j + 1})")
        object.__setattr__(self, "cartan", a)
        object.__setattr__(self, "positive_roots", _positive_roots(a, self.root_cap))

    @property
    def rank(self) -> int:
        return len(self.cartan)

    @property
    def dim_gb(self) -> int:
        return len(self.positive_roots)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, CartanDatum) and self.cartan == other.cartan

    def __hash__(self) -> int:
        return hash(self.cartan)

    def __repr__(self) -> str:
        return f"CartanDatum({self.name or list(map(list, self.cartan))})"

    def simple_root(self, i: int) -> Weight:
        self._check_index(i)
        return tuple(int(j == i - 1) for j in range(self.rank))

    def reflect(self, i: int, lam: Sequence[int]) -> Weight:
        """``s_i(lam) = lam - <lam, alpha_i^vee> alpha_i``."""
        self._check_index(i)
        return _reflect(self.cartan, i - 1, tuple(lam))

    def _check_index(self, i: int) -> None:
        if not 1 <= i <= self.rank:
            raise CartanError(f"simple root index {i} out of range 1..{self.rank}")

    def digest(self) -> str:
        """Stable hash of the matrix, used for cache keys."""
        blob = json.dumps([list(r) for r in self.cartan], separators=(",", ":"))
        return hashlib.sha256(blob.encode()).hexdigest()

    @classmethod
    def from_type(cls, name: str) -> "CartanDatum":
        return cls(cartan_matrix(name), name=name.upper())

    @classmethod
    def from_file(cls, path: str | Path) -> "CartanDatum":
        data = json.loads(Path(path).read_text())
        if not isinstance(data, list) or not all(isinstance(r, list) for r in data):
            raise CartanError(f"{path}: expected a JSON integer matrix")
        return cls(tuple(tuple(r) for r in data), name=None)


def simple_reflection_on_weight(datum: CartanDatum, i: int, lam: Sequence[int]) -> Weight:
    return datum.reflect(i, lam)


def positive_roots(datum: CartanDatum) -> list[Weight]:
    return list(datum.positive_roots)


def is_positive(lam: Sequence[int]) -> bool:
    """True for a nonzero weight with all coordinates >= 0 (roots only)."""
    return any(lam) and all(x >= 0 for x in lam)


def _reflect(a: tuple[tuple[int, ...], ...], i: int, lam: Weight) -> Weight:
    pairing = sum(lam[j] * a[i][j] for j in range(len(lam)))
    if pairing == 0:
        return lam
    out = list(lam)
    out[i] -= pairing
    return tuple(out)


def _positive_roots(a: tuple[tuple[int, ...], ...], cap: int) -> tuple[Weight, ...]:
    n = len(a)
    simple = [tuple(int(j == i) for j in range(n)) for i in range(n)]
    seen = set(simple)
    frontier = list(simple)
    while frontier:
        nxt = []
        for lam in frontier:
            for i in range(n):
                mu = _reflect(a, i, lam)
                if mu not in seen and all(x >= 0 for x in mu):
                    seen.add(mu)
                    nxt.append(mu)
                    if len(seen) > cap:
                        raise CartanError(
                            f"more than {cap} positive roots; Cartan matrix is not of finite type"
                        )
        frontier = nxt
    return tuple(sorted(seen))


_TYPE_RE = re.compile(r"^\s*([A-Ga-g])\s*(\d+)\s*$")


def cartan_matrix(name: str) -> tuple[tuple[int, ...], ...]:
    """Built-in Cartan matrices for types A, B, C, D, G2, F4.

    B_n and C_n carry the double bond between nodes 1 and 2; in B_n the first
    simple root is short, in C_n it is long.
    """
    m = _TYPE_RE.match(name)
    if not m:
        raise CartanError(f"unknown root system type {name!r}")
    letter, n = m.group(1).upper(), int(m.group(2))
    if n < 1:
        raise CartanError(f"rank must be positive in {name!r}")
    a = [[2 if i == j else 0 for j in range(n)] for i in range(n)]

    def bond(i: int, j: int) -> None:
        a[i][j] = a[j][i] = -1

    if letter == "A":
        for i in range(n - 1):
            bond(i, i + 1)
    elif letter in "BC":
        if n < 2:
            raise CartanError(f"type {letter} needs rank >= 2")
        for i in range(1, n - 1):
            bond(i, i + 1)
        short, long_ = (0, 1) if letter == "B" else (1, 0)
        a[short][long_], a[long_][short] = -2, -1
    elif letter == "D":
        if n < 4:
            raise CartanError("type D needs rank >= 4")
        for i in range(n - 2):
            bond(i, i + 1)
        bond(n - 3, n - 1)
    elif letter == "G" and n == 2:
        a[0][1], a[1][0] = -3, -1
    elif letter == "F" and n == 4:
        bond(0, 1)
        bond(2, 3)
        a[2][1], a[1][2] = -2, -1
    else:
        raise CartanError(f"unsupported type {name!r}")
    return tuple(tuple(r) for r in a)
