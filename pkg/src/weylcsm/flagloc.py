"""Localization model of H_T^*(G/B) and H_T^*(G/P).

A class is the vector of its restrictions to the torus fixed points.  Sign
conventions (none of them are free once the CSM/SSM duality has to hold):

* tangent weights at ``w`` are ``{-w alpha : alpha > 0}``;
* ``(d_i g)|_w = (g|_w - g|_{w s_i}) / (-w alpha_i)``;
* ``(s_i g)|_w = g|_{w s_i}`` (right Weyl action);
* ``T_i = d_i - s_i`` and ``T_i^vee = d_i + s_i``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterable, Mapping, Sequence

from .io import ratfunc_to_json
from .symfunc import RatFunc, rsum
from .weyl import WeylElement, WeylGroup, Word, format_word, multiply


class ExpansionError(ArithmeticError):
    """Triangular elimination left a nonzero residue."""


@dataclass(frozen=True)
class LocalizedClass:
    space: "FlagVariety | PartialFlagVariety"
    restrictions: Mapping[WeylElement, RatFunc]

    def __getitem__(self, w: WeylElement) -> RatFunc:
        return self.restrictions[w]

    def _zip(self, other: "LocalizedClass", op: Callable) -> "LocalizedClass":
        if other.space is not self.space:
            raise ValueError("classes live on different spaces")
        return LocalizedClass(
            self.space, {w: op(f, other.restrictions[w]) for w, f in self.restrictions.items()}
        )

    def __add__(self, other: "LocalizedClass") -> "LocalizedClass":
        return self._zip(other, lambda a, b: a + b)

    def __sub__(self, other: "LocalizedClass") -> "LocalizedClass":
        return self._zip(other, lambda a, b: a - b)

    def __mul__(self, other: "LocalizedClass | RatFunc") -> "LocalizedClass":
        if isinstance(other, LocalizedClass):
            return self._zip(other, lambda a, b: a * b)
        return LocalizedClass(self.space, {w: f * other for w, f in self.restrictions.items()})

    __rmul__ = __mul__

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, LocalizedClass):
            return NotImplemented
        return other.space is self.space and all(
            f == other.restrictions[w] for w, f in self.restrictions.items()
        )

    __hash__ = None  # type: ignore[assignment]

    def support(self) -> list[WeylElement]:
        return [w for w in self.space.fixed_points if not self.restrictions[w].is_zero()]

    def is_zero(self) -> bool:
        return all(f.is_zero() for f in self.restrictions.values())

    def to_json(self) -> dict[str, object]:
        """Fixed point (as a comma-separated word, ``""`` for id) -> RatFunc JSON."""
        g = self.space.group
        return {format_word(g.word(w)): ratfunc_to_json(self.restrictions[w]) for w in self.space.fixed_points}


class FlagVariety:
    """Equivariant localization data for ``G/B``."""

    def __init__(self, group: WeylGroup) -> None:
        self.group = group
        self.datum = group.datum
        self.nvars = group.rank
        self.fixed_points: list[WeylElement] = group.elements
        self._roots = [RatFunc.weight(b, self.nvars) for b in self.datum.positive_roots]
        self._ssm_cache: dict[WeylElement, LocalizedClass] = {}
        self._csm_y_cache: dict[WeylElement, LocalizedClass] = {}
        self._column_cache: dict[tuple[WeylElement, Word], dict[WeylElement, RatFunc]] = {}

    # -- scalars at fixed points ------------------------------------------

    def weight(self, lam: Sequence[int]) -> RatFunc:
        return RatFunc.weight(lam, self.nvars)

    def euler_class(self, w: WeylElement) -> RatFunc:
        """``prod_{alpha>0} (-w alpha)``."""
        out = RatFunc.one(self.nvars)
        for beta in self.datum.positive_roots:
            out = out * -self.weight(w.act(beta))
        return out

    def chern_tangent_restriction(self, w: WeylElement) -> RatFunc:
        """``c^T(T(G/B))|_w = prod_{alpha>0} (1 - w alpha)``."""
        out = RatFunc.one(self.nvars)
        for beta in self.datum.positive_roots:
            out = out * (1 - self.weight(w.act(beta)))
        return out

    def _positive_part(self, w: WeylElement) -> RatFunc:
        """``prod_{alpha>0, w alpha>0} (1 - w alpha)``."""
        out = RatFunc.one(self.nvars)
        for beta in self.datum.positive_roots:
            img = w.act(beta)
            if all(x >= 0 for x in img):
                out = out * (1 - self.weight(img))
        return out

    def inversion_roots(self, word: Sequence[int]) -> list[RatFunc]:
        """``beta_i = s_{q_1} ... s_{q_{i-1}} (alpha_{q_i})`` along the word."""
        prefix = self.group.one
        out = []
        for q in word:
            out.append(self.weight(prefix.act(self.datum.simple_root(q))))
            prefix = multiply(prefix, self.group.simple[q - 1])
        return out

    def _column(self, w: WeylElement, word: Word) -> dict[WeylElement, RatFunc]:
        """``u -> sum_{R subset Q, prod R = u} prod_{i in R} beta_i``."""
        key = (w, word)
        hit = self._column_cache.get(key)
        if hit is not None:
            return hit
        betas = self.inversion_roots(word)
        simple = self.group.simple
        groups: dict[WeylElement, list[RatFunc]] = {}

        def walk(pos: int, prod: WeylElement, term: RatFunc) -> None:
            if pos == len(word):
                groups.setdefault(prod, []).append(term)
                return
            walk(pos + 1, prod, term)
            walk(pos + 1, multiply(prod, simple[word[pos] - 1]), term * betas[pos])

        walk(0, self.group.one, RatFunc.one(self.nvars))
        col = {u: rsum(terms, self.nvars) for u, terms in groups.items()}
        self._column_cache[key] = col
        return col

    def csm_Y_restriction(self, u: WeylElement, w: WeylElement, word: Word | None = None) -> RatFunc:
        """``c^T_SM(Y(u)°)|_w`` from the subwords of a reduced word of ``w``."""
        word = self.group.word(w) if word is None else tuple(word)
        val = self._column(w, word).get(u)
        if val is None or val.is_zero():
            return RatFunc.zero(self.nvars)
        return self._positive_part(w) * val

    # -- classes -------------------------------------------------------------

    def make(self, restrictions: Mapping[WeylElement, RatFunc]) -> LocalizedClass:
        zero = RatFunc.zero(self.nvars)
        return LocalizedClass(self, {w: restrictions.get(w, zero) for w in self.fixed_points})

    def constant(self, value: RatFunc | int = 1) -> LocalizedClass:
        v = value if isinstance(value, RatFunc) else RatFunc.constant(self.nvars, value)
        return self.make({w: v for w in self.fixed_points})

    def point_class(self) -> LocalizedClass:
        """``[X(id)]``: the Euler class at ``id``, zero elsewhere."""
        return self.make({self.group.one: self.euler_class(self.group.one)})

    def csm_Y(self, u: WeylElement) -> LocalizedClass:
        hit = self._csm_y_cache.get(u)
        if hit is None:
            hit = self.make({w: self.csm_Y_restriction(u, w) for w in self.fixed_points})
            self._csm_y_cache[u] = hit
        return hit

    def ssm_Y(self, u: WeylElement) -> LocalizedClass:
        """``s^T_SM(Y(u)°) = c^T_SM(Y(u)°) / c^T(T(G/B))``."""
        hit = self._ssm_cache.get(u)
        if hit is None:
            hit = self.make(
                {
                    w: self.csm_Y_restriction(u, w) / self.chern_tangent_restriction(w)
                    for w in self.fixed_points
                }
            )
            self._ssm_cache[u] = hit
        return hit

    def right_reflect(self, i: int, g: LocalizedClass) -> LocalizedClass:
        s = self.group.simple[i - 1]
        return self.make({w: g[multiply(w, s)] for w in self.fixed_points})

    def divided_difference(self, i: int, g: LocalizedClass) -> LocalizedClass:
        s = self.group.simple[i - 1]
        alpha = self.datum.simple_root(i)
        out = {}
        for w in self.fixed_points:
            diff = g[w] - g[multiply(w, s)]
            out[w] = diff if diff.is_zero() else diff / -self.weight(w.act(alpha))
        return self.make(out)

    def hecke_T(self, i: int, g: LocalizedClass) -> LocalizedClass:
        return self.divided_difference(i, g) - self.right_reflect(i, g)

    def hecke_Tvee(self, i: int, g: LocalizedClass) -> LocalizedClass:
        return self.divided_difference(i, g) + self.right_reflect(i, g)

    def csm_X(self, w: WeylElement, word: Word | None = None) -> LocalizedClass:
        """``c^T_SM(X(w)°) = T_{i_k} ... T_{i_1} [X(id)]`` for ``w = s_{i_1}...s_{i_k}``."""
        word = self.group.word(w) if word is None else tuple(word)
        g = self.point_class()
        for i in word:
            g = self.hecke_T(i, g)
        return g

    def pairing(self, g1: LocalizedClass, g2: LocalizedClass) -> RatFunc:
        return rsum(
            (g1[w] * g2[w] / self.euler_class(w) for w in self.fixed_points
             if not g1[w].is_zero() and not g2[w].is_zero()),
            self.nvars,
        )

    # -- triangular expansion (the oracle) -------------------------------

    def expand(
        self, g: LocalizedClass, basis: Callable[[WeylElement], LocalizedClass]
    ) -> dict[WeylElement, RatFunc]:
        return expand_triangular(g, basis, self.group.key)

    def expand_in_ssm_basis(self, g: LocalizedClass) -> dict[WeylElement, RatFunc]:
        return self.expand(g, self.ssm_Y)

    def expand_in_csm_basis(self, g: LocalizedClass) -> dict[WeylElement, RatFunc]:
        return self.expand(g, self.csm_Y)


def expand_triangular(
    g: LocalizedClass,
    basis: Callable[[WeylElement], LocalizedClass],
    order_key: Callable[[WeylElement], tuple],
) -> dict[WeylElement, RatFunc]:
    """Coefficients of ``g`` in a basis with upward-closed Bruhat supports.

    ``basis(w)`` must vanish at ``x`` unless ``x >= w`` and be nonzero at
    ``w``.  A minimal-length point of the support of the residue is then a
    point where exactly one basis element contributes, so its coefficient is
    a single division.
    """
    residue = dict(g.restrictions)
    coeffs: dict[WeylElement, RatFunc] = {}
    while True:
        live = [w for w, f in residue.items() if not f.is_zero()]
        if not live:
            return coeffs
        w = min(live, key=order_key)
        b = basis(w)
        c = residue[w] / b[w]
        if w in coeffs:
            raise ExpansionError(f"support did not shrink at {w!r}")
        coeffs[w] = c
        for x, f in b.restrictions.items():
            if not f.is_zero():
                residue[x] = residue[x] - c * f


class PartialFlagVariety:
    """Localization on ``G/P``, fixed points labelled by minimal representatives."""

    def __init__(self, flag: FlagVariety, parabolic: Iterable[int]) -> None:
        self.flag = flag
        self.group = flag.group
        self.nvars = flag.nvars
        self.parabolic = tuple(sorted(set(parabolic)))
        self.fixed_points = self.group.minimal_representatives(self.parabolic)
        self.levi = self.group.parabolic_subgroup(self.parabolic)
        self._minimal = set(self.fixed_points)
        pset = set(self.parabolic)
        self._roots_outside = [
            b for b in self.group.datum.positive_roots
            if any(c for k, c in enumerate(b) if (k + 1) not in pset)
        ]
        self._cache: dict[WeylElement, LocalizedClass] = {}

    def is_minimal(self, w: WeylElement) -> bool:
        return w in self._minimal

    def _check(self, w: WeylElement) -> None:
        if w not in self._minimal:
            raise ValueError(f"{w!r} is not a minimal coset representative for P={self.parabolic}")

    def ssm_YP_at(self, w: WeylElement, u: WeylElement) -> RatFunc:
        """Pullback restriction ``sum_{x in W_P} s_SM(Y(wx)°)|_u`` at any lift ``u``."""
        return rsum((self.flag.ssm_Y(multiply(w, x))[u] for x in self.levi), self.nvars)

    def ssm_YP(self, w: WeylElement) -> LocalizedClass:
        self._check(w)
        hit = self._cache.get(w)
        if hit is None:
            hit = LocalizedClass(self, {u: self.ssm_YP_at(w, u) for u in self.fixed_points})
            self._cache[w] = hit
        return hit

    def euler_class(self, u: WeylElement) -> RatFunc:
        out = RatFunc.one(self.nvars)
        for beta in self._roots_outside:
            out = out * -self.flag.weight(u.act(beta))
        return out

    def pairing(self, g1: LocalizedClass, g2: LocalizedClass) -> RatFunc:
        return rsum(
            (g1[u] * g2[u] / self.euler_class(u) for u in self.fixed_points
             if not g1[u].is_zero() and not g2[u].is_zero()),
            self.nvars,
        )

    def expand_in_ssm_basis(self, g: LocalizedClass) -> dict[WeylElement, RatFunc]:
        return expand_triangular(g, self.ssm_YP, self.group.key)
