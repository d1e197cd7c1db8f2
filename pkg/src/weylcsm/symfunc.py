"""Exact arithmetic in Q[alpha_1..alpha_n] and its fraction field.

A :class:`RatFunc` is stored as ``scalar * poly * prod(L ** e)`` where
``scalar`` is a :class:`~fractions.Fraction`, ``poly`` is a primitive integer
polynomial with positive leading coefficient, and each ``L`` is a canonical
linear form ``c_0 + c_1 alpha_1 + ... + c_n alpha_n`` carrying a nonzero
integer exponent.  Negative exponents form the denominator.  Every denominator
met in this library is a product of linear forms (``1 + alpha``, ``w alpha``),
so cancellation is exact linear-form division and no multivariate gcd is
needed.

Invariant kept by every constructor: ``poly`` is not divisible by any linear
form that appears with a negative exponent.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import gcd, lcm
from typing import Iterable, Mapping, Sequence, Union

from . import kernels as K
from .cartan import CartanDatum, Weight

Linear = tuple[int, ...]  # (const, c_1, ..., c_n)
Scalar = Union[int, Fraction]

_ONE = {0: 1}


class PoleError(ArithmeticError):
    """Evaluation hit a genuine pole."""


class NotRepresentable(ArithmeticError):
    """Result would need a non-linear irreducible denominator."""


# ---------------------------------------------------------------------------
# monomial packing


def _shift(nvars: int, j: int) -> int:
    return K.BITS * (nvars - 1 - j)


def pack(exps: Sequence[int]) -> int:
    n = len(exps)
    key = 0
    for j, e in enumerate(exps):
        if not 0 <= e <= K.MASK:
            raise OverflowError(f"exponent {e} does not fit the monomial packing")
        key |= e << _shift(n, j)
    return key


def unpack(key: int, nvars: int) -> tuple[int, ...]:
    return tuple((key >> _shift(nvars, j)) & K.MASK for j in range(nvars))


def _degree(key: int, nvars: int) -> int:
    return sum(unpack(key, nvars))


# ---------------------------------------------------------------------------
# linear forms


def canonical_linear(lin: Sequence[int]) -> tuple[int, Linear]:
    """Split ``lin`` into ``(unit, canonical)`` with ``lin = unit * canonical``.

    The canonical form is primitive with first nonzero entry positive.
    """
    g = 0
    for c in lin:
        g = gcd(g, c)
    if g == 0:
        raise ValueError("zero linear form")
    first = next(c for c in lin if c)
    if first < 0:
        g = -g
    return g, tuple(c // g for c in lin)


@lru_cache(maxsize=None)
def _linear_poly(lin: Linear) -> dict:
    nvars = len(lin) - 1
    out = {}
    if lin[0]:
        out[0] = lin[0]
    for j, c in enumerate(lin[1:]):
        if c:
            out[1 << _shift(nvars, j)] = c
    return out


@lru_cache(maxsize=None)
def _linear_divisor(lin: Linear) -> tuple[list, int]:
    nvars = len(lin) - 1
    lead = next(j for j, c in enumerate(lin[1:]) if c)
    terms = sorted(_linear_poly(lin).items(), reverse=True)
    return terms, _shift(nvars, lead)


def _try_div_linear(poly: dict, lin: Linear) -> dict | None:
    terms, lead_shift = _linear_divisor(lin)
    return K.div_linear(poly, terms, lead_shift)


def _linear_power(lin: Linear, e: int) -> dict:
    return _linear_power_cached(lin, e)


@lru_cache(maxsize=4096)
def _linear_power_cached(lin: Linear, e: int) -> dict:
    if e == 1:
        return _linear_poly(lin)
    half = _linear_power_cached(lin, e // 2)
    sq = K.mul(half, half)
    return K.mul(sq, _linear_poly(lin)) if e & 1 else sq


# ---------------------------------------------------------------------------


class RatFunc:
    """Exact rational function with a factored linear denominator."""

    __slots__ = ("nvars", "scalar", "poly", "factors")

    def __init__(self, nvars: int, scalar: Fraction, poly: dict, factors: tuple) -> None:
        # raw constructor; use the classmethods or _make
        self.nvars = nvars
        self.scalar = scalar
        self.poly = poly
        self.factors = factors

    # -- constructors -----------------------------------------------------

    @classmethod
    def zero(cls, nvars: int) -> "RatFunc":
        return cls(nvars, Fraction(0), _ONE, ())

    @classmethod
    def one(cls, nvars: int) -> "RatFunc":
        return cls(nvars, Fraction(1), _ONE, ())

    @classmethod
    def constant(cls, nvars: int, value: Scalar) -> "RatFunc":
        return cls(nvars, Fraction(value), _ONE, ())

    @classmethod
    def linear(cls, const: int, coeffs: Sequence[int], nvars: int | None = None) -> "RatFunc":
        """``const + sum coeffs[j] alpha_{j+1}``, padded to ``nvars`` variables."""
        n = len(coeffs) if nvars is None else nvars
        lin = (int(const),) + tuple(int(c) for c in coeffs) + (0,) * (n - len(coeffs))
        if not any(lin[1:]):
            return cls.constant(n, const)
        unit, canon = canonical_linear(lin)
        return cls(n, Fraction(unit), _ONE, ((canon, 1),))

    @classmethod
    def weight(cls, lam: Sequence[int], nvars: int | None = None) -> "RatFunc":
        return cls.linear(0, lam, nvars)

    @classmethod
    def var(cls, j: int, nvars: int) -> "RatFunc":
        """The ``j``-th variable (0-based)."""
        return cls.linear(0, [int(k == j) for k in range(nvars)], nvars)

    @classmethod
    def from_terms(
        cls,
        nvars: int,
        terms: Mapping[Sequence[int], Scalar],
        den: Mapping[Linear, int] | None = None,
        scalar: Scalar = 1,
    ) -> "RatFunc":
        """Build from explicit numerator terms and denominator multiplicities."""
        fr = {tuple(k): Fraction(v) for k, v in terms.items() if v}
        if not fr:
            return cls.zero(nvars)
        common = lcm(*(v.denominator for v in fr.values()))
        poly = {pack(k): int(v * common) for k, v in fr.items()}
        factors: dict[Linear, int] = {}
        s = Fraction(scalar) / common
        for lin, m in (den or {}).items():
            if len(lin) != nvars + 1:
                raise ValueError("linear form has the wrong number of coordinates")
            unit, canon = canonical_linear(tuple(lin))
            s /= Fraction(unit) ** m
            factors[canon] = factors.get(canon, 0) - m
        return _make(nvars, s, poly, factors, cancel=True)

    # -- predicates and views --------------------------------------------

    def is_zero(self) -> bool:
        return self.scalar == 0

    def __bool__(self) -> bool:
        return self.scalar != 0

    def is_constant(self) -> bool:
        return self.is_zero() or (self.poly == _ONE and not self.factors)

    def is_polynomial(self) -> bool:
        return all(e > 0 for _, e in self.factors)

    @property
    def numerator_poly(self) -> dict:
        """Packed integer numerator (poly times positive linear factors)."""
        out = self.poly
        for lin, e in self.factors:
            if e > 0:
                out = K.mul(out, _linear_power(lin, e))
        return out

    @property
    def numerator(self) -> "Poly":
        if self.is_zero():
            return Poly(self.nvars, {})
        s = self.scalar.numerator
        return Poly._from_packed(self.nvars, K.scale(self.numerator_poly, s))

    @property
    def denominator_factors(self) -> list[tuple[Linear, int]]:
        return [(lin, -e) for lin, e in self.factors if e < 0]

    @property
    def denominator_scalar(self) -> int:
        return self.scalar.denominator

    def as_poly(self) -> "Poly":
        """The polynomial this function equals; raises if it has a pole."""
        if self.is_zero():
            return Poly(self.nvars, {})
        if not self.is_polynomial():
            raise NotRepresentable(f"not a polynomial: {self}")
        return Poly._from_packed(self.nvars, self.numerator_poly, self.scalar)

    def total_degree(self) -> int | None:
        """Degree of numerator minus degree of denominator (None for zero)."""
        if self.is_zero():
            return None
        d = max(_degree(k, self.nvars) for k in self.poly)
        return d + sum(e for _, e in self.factors)

    # -- arithmetic -------------------------------------------------------

    def _coerce(self, other: object) -> "RatFunc":
        if isinstance(other, RatFunc):
            if other.nvars != self.nvars:
                raise ValueError("RatFunc variable counts differ")
            return other
        if isinstance(other, (int, Fraction)):
            return RatFunc.constant(self.nvars, other)
        return NotImplemented  # type: ignore[return-value]

    def __neg__(self) -> "RatFunc":
        return RatFunc(self.nvars, -self.scalar, self.poly, self.factors)

    def __add__(self, other: object) -> "RatFunc":
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return rsum((self, o), self.nvars)

    __radd__ = __add__

    def __sub__(self, other: object) -> "RatFunc":
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return rsum((self, -o), self.nvars)

    def __rsub__(self, other: object) -> "RatFunc":
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return rsum((o, -self), self.nvars)

    def __mul__(self, other: object) -> "RatFunc":
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        if self.is_zero() or o.is_zero():
            return RatFunc.zero(self.nvars)
        if o.poly is _ONE or o.poly == _ONE:
            poly = self.poly
            cancel = bool(o.factors) and poly != _ONE
        elif self.poly == _ONE:
            poly = o.poly
            cancel = bool(self.factors)
        else:
            poly = K.mul(self.poly, o.poly)
            cancel = True
        factors = dict(self.factors)
        for lin, e in o.factors:
            factors[lin] = factors.get(lin, 0) + e
        return _make(self.nvars, self.scalar * o.scalar, poly, factors, cancel=cancel)

    __rmul__ = __mul__

    def __truediv__(self, other: object) -> "RatFunc":
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        if o.is_zero():
            raise ZeroDivisionError("division by zero RatFunc")
        if self.is_zero():
            return self
        poly = self.poly
        if o.poly != _ONE:
            q = _exact_div(poly, o.poly, self.nvars)
            if q is None:
                raise NotRepresentable("divisor has a non-linear factor that does not cancel")
            poly = q
        factors = dict(self.factors)
        for lin, e in o.factors:
            factors[lin] = factors.get(lin, 0) - e
        return _make(self.nvars, self.scalar / o.scalar, poly, factors, cancel=poly != _ONE)

    def __rtruediv__(self, other: object) -> "RatFunc":
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return o / self

    def __pow__(self, e: int) -> "RatFunc":
        if e < 0:
            return RatFunc.one(self.nvars) / (self ** (-e))
        out = RatFunc.one(self.nvars)
        for _ in range(e):
            out = out * self
        return out

    def __eq__(self, other: object) -> bool:
        if isinstance(other, (int, Fraction)):
            other = RatFunc.constant(self.nvars, other)
        if not isinstance(other, RatFunc):
            return NotImplemented
        if other.nvars != self.nvars:
            return False
        if (
            self.scalar == other.scalar
            and self.factors == other.factors
            and self.poly == other.poly
        ):
            return True
        # cross-multiplication: f - g is computed over the common denominator
        return (self - other).is_zero()

    __hash__ = None  # type: ignore[assignment]

    # -- substitutions ----------------------------------------------------

    def substitute_linear(self, images: Sequence[Sequence[int]]) -> "RatFunc":
        """Apply the linear ring map ``alpha_j -> images[j]`` (integer vectors).

        The map must be invertible over the integers (e.g. a Weyl group
        element, possibly extended by the identity on extra variables).
        """
        if self.is_zero():
            return self
        n = self.nvars
        scalar = self.scalar
        poly = self.poly
        if poly != _ONE:
            packed = [
                {1 << _shift(n, i): c for i, c in enumerate(img) if c} for img in images
            ]
            poly = K.substitute(poly, packed, n)
        factors: dict[Linear, int] = {}
        for lin, e in self.factors:
            c0 = lin[0]
            new = [c0] + [0] * n
            for j, c in enumerate(lin[1:]):
                if c:
                    img = images[j]
                    for i in range(n):
                        new[i + 1] += c * img[i]
            unit, canon = canonical_linear(tuple(new))
            if unit != 1:
                scalar *= Fraction(unit) ** e
            factors[canon] = factors.get(canon, 0) + e
        return _make(n, scalar, poly, factors, cancel=False)

    def phi(self) -> "RatFunc":
        """``alpha_j -> -alpha_j`` for all ``j``."""
        if self.is_zero():
            return self
        n = self.nvars
        poly = self.poly if self.poly == _ONE else K.negate_odd(self.poly, n)
        scalar = self.scalar
        factors: dict[Linear, int] = {}
        for lin, e in self.factors:
            unit, canon = canonical_linear((lin[0],) + tuple(-c for c in lin[1:]))
            if unit != 1:
                scalar *= Fraction(unit) ** e
            factors[canon] = factors.get(canon, 0) + e
        return _make(n, scalar, poly, factors, cancel=False)

    def specialize_zero(self) -> Fraction:
        """Value at ``alpha = 0``; raises :class:`PoleError` at a pole."""
        if self.is_zero():
            return Fraction(0)
        value = Fraction(self.poly.get(0, 0))
        pole = 0
        for lin, e in self.factors:
            if lin[0] == 0:
                pole -= e
            else:
                value *= Fraction(lin[0]) ** e
        if pole > 0:
            raise PoleError(f"pole of order {pole} at alpha = 0")
        if pole < 0:
            return Fraction(0)
        return self.scalar * value

    def evaluate(self, point: Sequence[Scalar]) -> Fraction:
        """Exact value at a rational point."""
        if self.is_zero():
            return Fraction(0)
        pt = [Fraction(x) for x in point]
        value = Fraction(0)
        for k, c in self.poly.items():
            t = Fraction(c)
            for j, e in enumerate(unpack(k, self.nvars)):
                if e:
                    t *= pt[j] ** e
            value += t
        for lin, e in self.factors:
            lv = lin[0] + sum(c * x for c, x in zip(lin[1:], pt))
            if lv == 0 and e < 0:
                raise PoleError("pole at evaluation point")
            value *= Fraction(lv) ** e
        return self.scalar * value

    # -- display ----------------------------------------------------------

    def __repr__(self) -> str:
        return f"RatFunc({self.to_text()})"

    def __str__(self) -> str:
        return self.to_text()

    def to_text(self, names: Sequence[str] | None = None) -> str:
        from .io import ratfunc_text

        return ratfunc_text(self, names)

    def latex(self, names: Sequence[str] | None = None) -> str:
        from .io import ratfunc_latex

        return ratfunc_latex(self, names)


def _make(nvars: int, scalar: Fraction, poly: dict, factors: dict, cancel: bool) -> RatFunc:
    if scalar == 0 or not poly:
        return RatFunc.zero(nvars)
    if poly is not _ONE and poly != _ONE:
        if len(poly) == 1:
            # a monomial is a product of variables: keep it factored
            ((k, c),) = poly.items()
            scalar = scalar * c
            if k:
                factors = dict(factors)
                for j, e in enumerate(unpack(k, nvars)):
                    if e:
                        var = _var_linear(nvars, j)
                        factors[var] = factors.get(var, 0) + e
            poly = _ONE
        else:
            lead = max(poly)
            g = K.content(poly)
            if poly[lead] < 0:
                g = -g
            if g != 1:
                poly = K.exact_div_int(poly, g)
                scalar = scalar * g
            if len(poly) <= nvars + 1:
                lin = _as_linear(poly, nvars)
                if lin is not None:
                    unit, canon = canonical_linear(lin)
                    scalar = scalar * unit
                    factors = dict(factors)
                    factors[canon] = factors.get(canon, 0) + 1
                    poly = _ONE
    if cancel and poly is not _ONE and poly != _ONE:
        for lin in [lin for lin, e in factors.items() if e < 0]:
            while factors[lin] < 0:
                q = _try_div_linear(poly, lin)
                if q is None:
                    break
                poly = q
                factors[lin] += 1
                if poly == _ONE:
                    break
            if poly == _ONE:
                poly = _ONE
                break
        if poly != _ONE and len(poly) > 1:
            lead = max(poly)
            if poly[lead] < 0:
                poly = K.scale(poly, -1)
                scalar = -scalar
    return RatFunc(nvars, scalar, poly, tuple(sorted((k, e) for k, e in factors.items() if e)))


@lru_cache(maxsize=None)
def _var_linear(nvars: int, j: int) -> Linear:
    return (0,) + tuple(int(i == j) for i in range(nvars))


@lru_cache(maxsize=None)
def _var_keys(nvars: int) -> dict:
    return {1 << _shift(nvars, j): j for j in range(nvars)}


def _as_linear(poly: dict, nvars: int) -> Linear | None:
    keys = _var_keys(nvars)
    lin = [0] * (nvars + 1)
    for k, c in poly.items():
        if k == 0:
            lin[0] = c
        else:
            j = keys.get(k)
            if j is None:
                return None
            lin[j + 1] = c
    return tuple(lin)


def rsum(terms: Iterable[RatFunc], nvars: int) -> RatFunc:
    """Sum over the least common denominator, then cancel."""
    terms = [t for t in terms if not t.is_zero()]
    if not terms:
        return RatFunc.zero(nvars)
    if len(terms) == 1:
        return terms[0]
    lins: set = set()
    for t in terms:
        lins.update(lin for lin, _ in t.factors)
    common: dict[Linear, int] = {}
    for lin in lins:
        common[lin] = min(dict(t.factors).get(lin, 0) for t in terms)
    den = lcm(*(t.scalar.denominator for t in terms))
    acc: dict = {}
    for t in terms:
        fac = dict(t.factors)
        part = t.poly
        for lin in lins:
            e = fac.get(lin, 0) - common[lin]
            if e:
                part = K.mul(part, _linear_power(lin, e))
        c = t.scalar.numerator * (den // t.scalar.denominator)
        acc = K.lincomb(acc, 1, part, c)
    if not acc:
        return RatFunc.zero(nvars)
    return _make(nvars, Fraction(1, den), acc, {k: e for k, e in common.items() if e}, cancel=True)


def _exact_div(p: dict, d: dict, nvars: int) -> dict | None:
    """Exact quotient of integer polynomials under lex order, or None."""
    if d == _ONE:
        return p
    items = sorted(d.items(), reverse=True)
    lead_k, lead_c = items[0]
    lead_e = unpack(lead_k, nvars)
    rest = items[1:]
    rem = dict(p)
    heap = [-k for k in rem]
    heapq.heapify(heap)
    q: dict = {}
    while heap:
        k = -heapq.heappop(heap)
        c = rem.pop(k, 0)
        if c == 0:
            continue
        ke = unpack(k, nvars)
        if any(a < b for a, b in zip(ke, lead_e)):
            return None
        t, r = divmod(c, lead_c)
        if r:
            return None
        tk = k - lead_k
        q[tk] = t
        for lk, lc in rest:
            nk = tk + lk
            if nk in rem:
                rem[nk] -= t * lc
            else:
                rem[nk] = -t * lc
                heapq.heappush(heap, -nk)
    return q


# ---------------------------------------------------------------------------
# polynomials with rational coefficients (user-facing values)


class Poly:
    """Sparse polynomial: exponent tuple -> nonzero Fraction."""

    __slots__ = ("nvars", "terms")

    def __init__(self, nvars: int, terms: Mapping[Sequence[int], Scalar]) -> None:
        self.nvars = nvars
        clean = {}
        for k, v in terms.items():
            k = tuple(k)
            if len(k) != nvars:
                raise ValueError("exponent vector has the wrong length")
            if v:
                clean[k] = Fraction(v)
        self.terms = clean

    @classmethod
    def _from_packed(cls, nvars: int, packed: dict, scalar: Scalar = 1) -> "Poly":
        s = Fraction(scalar)
        return cls(nvars, {unpack(k, nvars): s * c for k, c in packed.items()})

    def to_ratfunc(self) -> RatFunc:
        return RatFunc.from_terms(self.nvars, self.terms)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, Poly):
            return self.nvars == other.nvars and self.terms == other.terms
        if isinstance(other, (int, Fraction)):
            return self.terms == ({(0,) * self.nvars: Fraction(other)} if other else {})
        return NotImplemented

    __hash__ = None  # type: ignore[assignment]

    def __add__(self, other: "Poly") -> "Poly":
        out = dict(self.terms)
        for k, v in other.terms.items():
            out[k] = out.get(k, 0) + v
        return Poly(self.nvars, out)

    def __neg__(self) -> "Poly":
        return Poly(self.nvars, {k: -v for k, v in self.terms.items()})

    def __sub__(self, other: "Poly") -> "Poly":
        return self + (-other)

    def __mul__(self, other: "Poly | Scalar") -> "Poly":
        if isinstance(other, (int, Fraction)):
            return Poly(self.nvars, {k: v * other for k, v in self.terms.items()})
        out: dict = {}
        for k1, v1 in self.terms.items():
            for k2, v2 in other.terms.items():
                k = tuple(a + b for a, b in zip(k1, k2))
                out[k] = out.get(k, 0) + v1 * v2
        return Poly(self.nvars, out)

    __rmul__ = __mul__

    def is_zero(self) -> bool:
        return not self.terms

    def degree(self) -> int:
        return max((sum(k) for k in self.terms), default=-1)

    def degrees(self) -> set[int]:
        return {sum(k) for k in self.terms}

    def is_homogeneous(self, degree: int | None = None) -> bool:
        ds = self.degrees()
        if not ds:
            return True
        return len(ds) == 1 and (degree is None or ds == {degree})

    def set_var(self, j: int, value: Scalar) -> "Poly":
        """Substitute a number for variable ``j``; the slot is kept with exponent 0."""
        out: dict = {}
        for k, v in self.terms.items():
            nk = k[:j] + (0,) + k[j + 1 :]
            out[nk] = out.get(nk, 0) + v * Fraction(value) ** k[j]
        return Poly(self.nvars, out)

    def drop_last_var(self) -> "Poly":
        if any(k[-1] for k in self.terms):
            raise ValueError("last variable still occurs")
        return Poly(self.nvars - 1, {k[:-1]: v for k, v in self.terms.items()})

    def homogenize(self, degree: int) -> "Poly":
        """Append a variable ``h`` and pad each monomial to ``degree``."""
        out = {}
        for k, v in self.terms.items():
            d = sum(k)
            if d > degree:
                raise ValueError(f"monomial of degree {d} exceeds {degree}")
            out[k + (degree - d,)] = v
        return Poly(self.nvars + 1, out)

    def __repr__(self) -> str:
        return f"Poly({self.to_ratfunc().to_text()})"


# ---------------------------------------------------------------------------
# operators on Frac H_T(pt)


@lru_cache(maxsize=None)
def _reflection_images(datum: CartanDatum, i: int) -> tuple[Weight, ...]:
    return tuple(datum.reflect(i, datum.simple_root(j)) for j in range(1, datum.rank + 1))


def _pad(images: Sequence[Sequence[int]], nvars: int) -> list[tuple[int, ...]]:
    r = len(images)
    out = [tuple(img) + (0,) * (nvars - r) for img in images]
    for j in range(r, nvars):
        out.append(tuple(int(i == j) for i in range(nvars)))
    return out


def weyl_act(w, f: RatFunc) -> RatFunc:
    """``w . f``: substitute ``alpha_j -> w(alpha_j)``; extra variables are fixed."""
    r = len(w.matrix)
    images = [w.column(j) for j in range(r)]
    return f.substitute_linear(_pad(images, f.nvars))


def reflect(datum: CartanDatum, i: int, f: RatFunc) -> RatFunc:
    return f.substitute_linear(_pad(_reflection_images(datum, i), f.nvars))


def simple_root_func(datum: CartanDatum, i: int, nvars: int | None = None) -> RatFunc:
    return RatFunc.weight(datum.simple_root(i), nvars or datum.rank)


def divided_difference(datum: CartanDatum, i: int, f: RatFunc) -> RatFunc:
    """``(f - s_i f) / alpha_i``."""
    diff = f - reflect(datum, i, f)
    if diff.is_zero():
        return diff
    return diff / simple_root_func(datum, i, f.nvars)


def tvee(datum: CartanDatum, i: int, f: RatFunc) -> RatFunc:
    """``T^vee_i = d_i + s_i``."""
    sf = reflect(datum, i, f)
    diff = f - sf
    if diff.is_zero():
        return sf
    return diff / simple_root_func(datum, i, f.nvars) + sf


def phi(f: RatFunc) -> RatFunc:
    return f.phi()


def specialize_zero(f: RatFunc) -> Fraction:
    return f.specialize_zero()


@dataclass(frozen=True)
class Atom:
    """One factor of an operator word.

    ``kind`` is ``"s"`` (reflection), ``"d"`` (divided difference), ``"tv"``
    (``T^vee``) or ``"mul"`` (multiplication by ``value``).
    """

    kind: str
    index: int = 0
    value: RatFunc | None = None

    def __call__(self, datum: CartanDatum, f: RatFunc) -> RatFunc:
        if self.kind == "s":
            return reflect(datum, self.index, f)
        if self.kind == "d":
            return divided_difference(datum, self.index, f)
        if self.kind == "tv":
            return tvee(datum, self.index, f)
        if self.kind == "mul":
            assert self.value is not None
            return f * self.value
        raise ValueError(f"unknown operator atom {self.kind!r}")


OperatorWord = Sequence[Atom]


def apply_operator_word(datum: CartanDatum, ops: OperatorWord, f: RatFunc) -> RatFunc:
    """Apply ``ops[0] o ops[1] o ... o ops[-1]`` to ``f`` (rightmost first)."""
    for atom in reversed(ops):
        f = atom(datum, f)
    return f
