"""Text, LaTeX and JSON renderings of :class:`RatFunc` values."""

from __future__ import annotations

from fractions import Fraction
from typing import Any, Sequence

from .symfunc import Linear, RatFunc, unpack


def default_names(nvars: int, latex: bool = False) -> list[str]:
    if latex:
        return [f"\\alpha_{{{j + 1}}}" if j >= 9 else f"\\alpha_{j + 1}" for j in range(nvars)]
    return [f"a{j + 1}" for j in range(nvars)]


def names_with_hbar(rank: int, latex: bool = False) -> list[str]:
    return default_names(rank, latex) + ["h"]


def _factor_order(item: tuple[Linear, int]) -> tuple:
    lin, _ = item
    coeffs = lin[1:]
    return (sum(abs(c) for c in coeffs), tuple(-c for c in coeffs), lin[0])


def _monomial(exps: Sequence[int], names: Sequence[str], latex: bool) -> str:
    parts = []
    for name, e in zip(names, exps):
        if e == 1:
            parts.append(name)
        elif e > 1:
            parts.append(f"{name}^{{{e}}}" if latex else f"{name}^{e}")
    return ("" if latex else "*").join(parts)


def _terms_str(terms: list[tuple[tuple[int, ...], int]], names: Sequence[str], latex: bool) -> str:
    """Render integer-coefficient terms, highest degree first."""
    mul = "" if latex else "*"
    out = []
    for k, (exps, c) in enumerate(terms):
        mono = _monomial(exps, names, latex)
        mag = abs(c)
        if not mono:
            body = str(mag)
        elif mag == 1:
            body = mono
        else:
            body = f"{mag}{mul}{mono}"
        if k == 0:
            out.append(("-" if c < 0 else "") + body)
        else:
            out.append(("-" if c < 0 else "+") + body)
    return "".join(out)


def _linear_terms(lin: Linear) -> list[tuple[tuple[int, ...], int]]:
    n = len(lin) - 1
    terms = []
    for j, c in enumerate(lin[1:]):
        if c:
            terms.append((tuple(int(i == j) for i in range(n)), c))
    if lin[0]:
        terms.insert(0, ((0,) * n, lin[0]))
    return terms


def _poly_terms(poly: dict, nvars: int) -> list[tuple[tuple[int, ...], int]]:
    items = [(unpack(k, nvars), c) for k, c in poly.items()]
    items.sort(key=lambda t: (-sum(t[0]), tuple(-e for e in t[0])))
    return items


def _wrap(body: str, nterms: int) -> str:
    return f"({body})" if nterms > 1 else body


def _factor_str(lin: Linear, e: int, names: Sequence[str], latex: bool) -> str:
    terms = _linear_terms(lin)
    body = _wrap(_terms_str(terms, names, latex), len(terms))
    if e == 1:
        return body
    return f"{body}^{{{e}}}" if latex else f"{body}^{e}"


def _render(f: RatFunc, names: Sequence[str] | None, latex: bool) -> str:
    if f.is_zero():
        return "0"
    n = f.nvars
    names = list(names) if names is not None else default_names(n, latex)
    mul = "" if latex else "*"
    num_parts: list[str] = []
    den_parts: list[str] = []
    factors = sorted(f.factors, key=_factor_order)
    poly_terms = _poly_terms(f.poly, n)
    trivial_poly = len(poly_terms) == 1 and not any(poly_terms[0][0])
    if not trivial_poly:
        num_parts.append(_terms_str(poly_terms, names, latex))
    for lin, e in factors:
        if e > 0:
            num_parts.append(_factor_str(lin, e, names, latex))
        else:
            den_parts.append(_factor_str(lin, -e, names, latex))
    p, q = f.scalar.numerator, f.scalar.denominator
    sign = "-" if p < 0 else ""
    p = abs(p)
    if num_parts and not trivial_poly and (len(num_parts) > 1 or p != 1):
        num_parts[0] = _wrap(num_parts[0], len(poly_terms))
    if p != 1 or not num_parts:
        num_parts.insert(0, str(p))
    if q != 1:
        den_parts.insert(0, str(q))
    num = mul.join(num_parts)
    if not den_parts:
        return sign + num
    if latex:
        return f"{sign}\\frac{{{num}}}{{{''.join(den_parts)}}}"
    den = "*".join(den_parts)
    if len(den_parts) > 1:
        den = f"({den})"
    if len(num_parts) > 1 or (not trivial_poly and len(poly_terms) > 1 and not num.startswith("(")):
        num = f"({num})"
    return f"{sign}{num}/{den}"


def ratfunc_text(f: RatFunc, names: Sequence[str] | None = None) -> str:
    """Plain-text form, e.g. ``-2/((1+a1)*(1+a2)*(1+a1+a2))``."""
    return _render(f, names, latex=False)


def ratfunc_latex(f: RatFunc, names: Sequence[str] | None = None) -> str:
    return _render(f, names, latex=True)


# -- JSON -------------------------------------------------------------------


def ratfunc_to_json(f: RatFunc) -> dict[str, Any]:
    """``{nvars, num: [[p, q, exps]...], den: [{const, coeffs, mult}...], scalar: [p, q]}``.

    The numerator is the integer polynomial part (including numerator linear
    factors, expanded); the rational scalar multiplies it.
    """
    n = f.nvars
    if f.is_zero():
        return {"nvars": n, "num": [], "den": [], "scalar": [0, 1]}
    num = [[c, 1, list(e)] for e, c in _poly_terms(f.numerator_poly, n)]
    den = [
        {"const": lin[0], "coeffs": list(lin[1:]), "mult": m}
        for lin, m in sorted(f.denominator_factors, key=lambda it: _factor_order((it[0], 0)))
    ]
    return {
        "nvars": n,
        "num": num,
        "den": den,
        "scalar": [f.scalar.numerator, f.scalar.denominator],
    }


def ratfunc_from_json(data: dict[str, Any]) -> RatFunc:
    try:
        n = int(data["nvars"]) if "nvars" in data else len(data["num"][0][2])
        terms = {tuple(e): Fraction(p, q) for p, q, e in data["num"]}
        den = {(int(d["const"]),) + tuple(int(c) for c in d["coeffs"]): int(d["mult"]) for d in data["den"]}
        sp, sq = data["scalar"]
    except (KeyError, TypeError, ValueError, IndexError) as exc:
        raise ValueError(f"malformed RatFunc JSON: {exc}") from exc
    return RatFunc.from_terms(n, terms, den, Fraction(sp, sq))
