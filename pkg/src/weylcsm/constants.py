"""Structure constants of SSM, CSM and stable-basis classes on G/B and G/P.

``c_ssm`` is computed from the operator formula over pairs of subwords of a
reduced word of ``w``; the localization expansion in :mod:`weylcsm.flagloc` is
kept separate and only used to check it.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any, Iterable, Sequence

from .bott_samelson import states_of, theorem_word_value
from .io import ratfunc_to_json
from .symfunc import Poly, RatFunc, rsum
from .weyl import WeylElement, WeylGroup, Word, format_word, multiply, subwords_with_product

BASES = ("ssm", "csm", "stable")


class ConstantError(ArithmeticError):
    """A structure constant violated a property it must have (polynomiality, integrality)."""


def _check(group: WeylGroup, *elems: WeylElement) -> None:
    for x in elems:
        if x.datum != group.datum:
            raise ValueError("element belongs to a different root system")


def c_ssm(
    group: WeylGroup, u: WeylElement, v: WeylElement, w: WeylElement, word: Word | None = None
) -> RatFunc:
    """``c_{u,v}^w`` for SSM classes of opposite Schubert cells.

    ``word`` picks the reduced word of ``w``; by default the greedy one.
    """
    _check(group, u, v, w)
    n = group.rank
    if u.length > w.length or v.length > w.length:
        return RatFunc.zero(n)
    q = group.word(w) if word is None else tuple(word)
    datum = group.datum
    rs = subwords_with_product(datum, q, u)
    if not rs:
        return RatFunc.zero(n)
    ss = rs if u == v else subwords_with_product(datum, q, v)
    terms = []
    for r in rs:
        rb = r.bits
        for s in ss:
            terms.append(theorem_word_value(datum, q, states_of(rb, s.bits, len(q))))
    return rsum(terms, n)


def d_csm(group: WeylGroup, u: WeylElement, v: WeylElement, w: WeylElement) -> RatFunc:
    """``d_{u,v}^w`` for CSM classes; a polynomial, checked on every call."""
    c = c_ssm(group, u, v, w)
    if c.is_zero():
        return c
    sign = -1 if (u.length + v.length - w.length) % 2 else 1
    out = c.phi() * sign
    for beta in group.datum.positive_roots:
        out = out * (1 - RatFunc.weight(beta, group.rank))
    if not out.is_polynomial():
        raise ConstantError(f"d constant is not a polynomial: {out}")
    return out


def e_stable(group: WeylGroup, u: WeylElement, v: WeylElement, w: WeylElement) -> Poly:
    """``e_{u,v}^w`` in ``(alpha_1..alpha_n, h)``, homogeneous of degree ``dim G/B``."""
    dim = group.datum.dim_gb
    d = d_csm(group, u, v, w)
    p = d.as_poly() * (-1 if dim % 2 else 1)
    try:
        return p.homogenize(dim)
    except ValueError as exc:
        raise ConstantError(str(exc)) from exc


def c_parabolic(
    group: WeylGroup, u: WeylElement, v: WeylElement, w: WeylElement, parabolic: Iterable[int]
) -> RatFunc:
    """``c_{u,v}^w(P) = sum_{x, y in W_P} c_{ux, vy}^w`` for ``u, v, w`` in ``W^P``."""
    par = tuple(sorted(set(parabolic)))
    reps = set(group.minimal_representatives(par))
    for name, x in (("u", u), ("v", v), ("w", w)):
        if x not in reps:
            raise ValueError(f"{name}={format_word(group.word(x)) or 'id'} is not minimal for P={list(par)}")
    levi = group.parabolic_subgroup(par)
    terms = []
    for x in levi:
        ux = multiply(u, x)
        for y in levi:
            c = c_ssm(group, ux, multiply(v, y), w)
            if not c.is_zero():
                terms.append(c)
    return rsum(terms, group.rank)


def euler_characteristic(group: WeylGroup, u: WeylElement, v: WeylElement, w: WeylElement) -> int:
    """Non-equivariant limit of ``c_{u,v}^w``."""
    x = c_ssm(group, u, v, w).specialize_zero()
    if x.denominator != 1:
        raise ConstantError(f"non-integral Euler limit {x}")
    return int(x)


def restriction_closed_form(group: WeylGroup, u: WeylElement, w: WeylElement) -> RatFunc:
    """``c_{u,w}^w = prod_{alpha>0, w alpha<0}(1 - w alpha)^{-1} * sum_R prod beta``.

    This is ``s_SM(Y(u)°)|_w`` written out from the inversion roots of a
    reduced word, independent of the operator formula.
    """
    _check(group, u, w)
    n = group.rank
    q = group.word(w)
    subs = subwords_with_product(group.datum, q, u)
    if not subs:
        return RatFunc.zero(n)
    prefix = group.one
    betas = []
    for letter in q:
        betas.append(RatFunc.weight(prefix.act(group.datum.simple_root(letter)), n))
        prefix = multiply(prefix, group.simple[letter - 1])
    terms = []
    for s in subs:
        t = RatFunc.one(n)
        for k in s.positions:
            t = t * betas[k]
        terms.append(t)
    den = RatFunc.one(n)
    for beta in group.datum.positive_roots:
        img = w.act(beta)
        if any(x < 0 for x in img):
            den = den * (1 - RatFunc.weight(img, n))
    return rsum(terms, n) / den


def constant(
    group: WeylGroup,
    basis: str,
    u: WeylElement,
    v: WeylElement,
    w: WeylElement,
    parabolic: Sequence[int] = (),
) -> RatFunc | Poly:
    if parabolic:
        if basis != "ssm":
            raise ValueError("parabolic constants are only defined for the ssm basis")
        return c_parabolic(group, u, v, w, parabolic)
    if basis == "ssm":
        return c_ssm(group, u, v, w)
    if basis == "csm":
        return d_csm(group, u, v, w)
    if basis == "stable":
        return e_stable(group, u, v, w)
    raise ValueError(f"unknown basis {basis!r}; expected one of {', '.join(BASES)}")


@dataclass(frozen=True)
class StructureConstant:
    type: str | None
    basis: str
    u: Word
    v: Word
    w: Word
    parabolic: tuple[int, ...]
    value: RatFunc | Poly
    euler_limit: int | None

    def to_json(self) -> dict[str, Any]:
        val = self.value.to_ratfunc() if isinstance(self.value, Poly) else self.value
        return {
            "type": self.type,
            "basis": self.basis,
            "u": format_word(self.u),
            "v": format_word(self.v),
            "w": format_word(self.w),
            "parabolic": list(self.parabolic),
            "value": ratfunc_to_json(val),
            "euler_limit": self.euler_limit,
        }


def compute_record(
    group: WeylGroup,
    basis: str,
    u: WeylElement,
    v: WeylElement,
    w: WeylElement,
    parabolic: Sequence[int] = (),
) -> StructureConstant:
    value = constant(group, basis, u, v, w, parabolic)
    limit: int | None = None
    if basis == "ssm":
        assert isinstance(value, RatFunc)
        x = value.specialize_zero()
        if x.denominator != 1:
            raise ConstantError(f"non-integral Euler limit {x}")
        limit = int(x)
    return StructureConstant(
        group.datum.name,
        basis,
        group.word(u),
        group.word(v),
        group.word(w),
        tuple(sorted(set(parabolic))),
        value,
        limit,
    )


__all__ = [
    "BASES",
    "ConstantError",
    "StructureConstant",
    "c_parabolic",
    "c_ssm",
    "compute_record",
    "constant",
    "d_csm",
    "e_stable",
    "euler_characteristic",
    "restriction_closed_form",
]
