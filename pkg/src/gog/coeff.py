"""Exact real algebraic numbers.

Every value exposes an integer minimal polynomial and an isolating interval
with rational endpoints.  Internally a value is one of

* a rational (:class:`fractions.Fraction`),
* a finite Q-linear combination of real radicals ``prod p_i^(a_i)`` over
  distinct primes with exponents in (0, 1) -- these are linearly independent
  over Q, so the representation is canonical and zero testing is exact,
* a generic root: irreducible integer polynomial plus isolating interval.

Radical combinations are closed under +, -, * and reciprocals (reciprocals
are solved in the multi-radical field by linear algebra), and roots of a
single radical term stay radical.  Everything else goes through the generic
route: build a candidate polynomial with a resultant, factor it over Z, and
keep the root whose isolating interval meets an interval enclosure of the
exact result.  The minimal polynomial of a radical combination is produced on
demand by the same generic route.

Comparisons refine rational enclosures until they separate, which always
terminates because distinct algebraic numbers have disjoint enclosures
eventually.  Polynomials are tuples of Python ints, highest degree first.
"""
from __future__ import annotations

import enum
from fractions import Fraction
from functools import lru_cache, total_ordering
from math import floor
from numbers import Rational as _RationalABC

import sympy
from sympy.polys.domains import QQ, ZZ
from sympy.polys.factortools import dup_factor_list
from sympy.polys.rootisolation import dup_count_real_roots, dup_isolate_real_roots_sqf

from .errors import DivisionByZero, NegativeRadicand, RootNotRepresentable

__all__ = [
    "AlgebraicReal",
    "Ordering",
    "add",
    "mul",
    "neg",
    "recip",
    "cmp",
    "root",
    "pow_rational",
    "as_algebraic",
    "RationalBackend",
]


class Ordering(enum.IntEnum):
    LESS = -1
    EQUAL = 0
    GREATER = 1

    @classmethod
    def of(cls, s: int) -> "Ordering":
        return cls.LESS if s < 0 else cls.GREATER if s > 0 else cls.EQUAL


Poly = tuple  # tuple[int, ...], highest degree first

_X, _Y = sympy.symbols("X Y")


# --------------------------------------------------------------------------
# integer polynomial helpers


def _gcd(a: int, b: int) -> int:
    a, b = abs(a), abs(b)
    while b:
        a, b = b, a % b
    return a


def _primitive(coeffs) -> Poly:
    coeffs = [int(c) for c in coeffs]
    while coeffs and coeffs[0] == 0:
        coeffs.pop(0)
    g = 0
    for c in coeffs:
        g = _gcd(g, c)
    if g == 0:
        return ()
    if coeffs[0] < 0:
        g = -g
    return tuple(c // g for c in coeffs)


def _from_fractions(coeffs) -> Poly:
    den = 1
    for c in coeffs:
        d = Fraction(c).denominator
        den = den * d // _gcd(den, d)
    return _primitive([Fraction(c) * den for c in coeffs])


def _sign_at(p: Poly, r: Fraction) -> int:
    # sign of p(n/d) * d^deg, integers only
    n, d = r.numerator, r.denominator
    acc = p[0]
    dpow = 1
    for c in p[1:]:
        dpow *= d
        acc = acc * n + c * dpow
    return (acc > 0) - (acc < 0)


def _to_dup(p: Poly):
    return [ZZ(c) for c in p]


def _from_sympy_poly(sp) -> Poly:
    return _primitive(int(c) for c in sympy.Poly(sp, _X).all_coeffs())


@lru_cache(maxsize=4096)
def _factors(p: Poly) -> tuple:
    _, facs = dup_factor_list(_to_dup(p), ZZ)
    return tuple(_primitive(int(c) for c in f) for f, _ in facs)


@lru_cache(maxsize=4096)
def _isolate(p: Poly) -> tuple:
    """Isolating intervals of the real roots of an irreducible ``p``."""
    out = []
    for lo, hi in dup_isolate_real_roots_sqf(_to_dup(p), ZZ):
        out.append((Fraction(int(lo.numerator), int(lo.denominator)),
                    Fraction(int(hi.numerator), int(hi.denominator))))
    return tuple(out)


def _count_roots(p: Poly, lo: Fraction, hi: Fraction) -> int:
    return int(dup_count_real_roots(_to_dup(p), ZZ, inf=QQ(lo.numerator, lo.denominator),
                                    sup=QQ(hi.numerator, hi.denominator)))


def _as_expr(p: Poly, var):
    deg = len(p) - 1
    return sum(c * var ** (deg - i) for i, c in enumerate(p))


@lru_cache(maxsize=4096)
def _sum_candidates(p: Poly, q: Poly) -> tuple:
    res = sympy.resultant(_as_expr(p, _Y), _as_expr(q, _X - _Y), _Y)
    return _factors(_from_sympy_poly(res))


@lru_cache(maxsize=4096)
def _prod_candidates(p: Poly, q: Poly) -> tuple:
    m = len(q) - 1
    q_hom = sum(c * _X ** (m - i) * _Y ** i for i, c in enumerate(q))
    res = sympy.resultant(_as_expr(p, _Y), q_hom, _Y)
    return _factors(_from_sympy_poly(res))


@lru_cache(maxsize=4096)
def _power_candidates(p: Poly, m: int) -> tuple:
    res = sympy.resultant(_as_expr(p, _Y), _X - _Y ** m, _Y)
    return _factors(_from_sympy_poly(res))


@lru_cache(maxsize=4096)
def _root_candidates(p: Poly, n: int) -> tuple:
    deg = len(p) - 1
    expanded = [0] * (deg * n + 1)
    for i, c in enumerate(p):
        expanded[i * n] = c
    return _factors(_primitive(expanded))


def _compose_linear(p: Poly, scale: Fraction, shift: Fraction) -> Poly:
    """p(scale*X + shift), denominators cleared."""
    result = [Fraction(0)]
    for c in p:
        nxt = [Fraction(0)] * (len(result) + 1)
        for i, a in enumerate(result):
            nxt[i] += a * scale
            nxt[i + 1] += a * shift
        nxt[-1] += c
        result = nxt
    return _from_fractions(result)


def _bisect(p: Poly, lo: Fraction, hi: Fraction):
    mid = (lo + hi) / 2
    if _sign_at(p, lo) * _sign_at(p, mid) < 0:
        return lo, mid
    return mid, hi


def _iroot(n: int, k: int) -> int:
    return int(sympy.integer_nthroot(n, k)[0])


def _nth_root_floor(r: Fraction, n: int, bits: int) -> Fraction:
    # largest j / 2^bits with (j / 2^bits)^n <= r, for r >= 0
    scaled = r * (1 << (n * bits))
    return Fraction(_iroot(scaled.numerator // scaled.denominator, n), 1 << bits)


def _nth_root_ceil(r: Fraction, n: int, bits: int) -> Fraction:
    lo = _nth_root_floor(r, n, bits)
    if lo ** n == r:
        return lo
    return lo + Fraction(1, 1 << bits)


def _exact_nth_root(r: Fraction, n: int):
    a, ok1 = sympy.integer_nthroot(abs(r.numerator), n)
    b, ok2 = sympy.integer_nthroot(r.denominator, n)
    if ok1 and ok2:
        val = Fraction(int(a), int(b))
        return -val if r < 0 else val
    return None


# --------------------------------------------------------------------------
# radical combinations
#
# A key is a sorted tuple ((p, a), ...) with p prime and a in (0, 1); it
# stands for prod p^a.  A combination is a dict key -> nonzero Fraction.


@lru_cache(maxsize=8192)
def _factor_int(n: int) -> tuple:
    return tuple(sorted(sympy.factorint(n).items()))


def _radical_power(r: Fraction, a: Fraction) -> dict:
    """r^a for r > 0 as a single-term combination."""
    exps: dict = {}
    for p, k in _factor_int(r.numerator):
        exps[p] = exps.get(p, 0) + k * a
    for p, k in _factor_int(r.denominator):
        exps[p] = exps.get(p, 0) - k * a
    coeff = Fraction(1)
    key = []
    for p in sorted(exps):
        e = Fraction(exps[p])
        fl = floor(e)
        coeff *= Fraction(p) ** fl
        if e != fl:
            key.append((p, e - fl))
    return {tuple(key): coeff}


def _key_mul(k1: tuple, k2: tuple):
    if not k1:
        return k2, 1
    if not k2:
        return k1, 1
    exps = dict(k1)
    for p, a in k2:
        exps[p] = exps.get(p, 0) + a
    factor = 1
    key = []
    for p in sorted(exps):
        e = exps[p]
        if e >= 1:
            e -= 1
            factor *= p
        if e:
            key.append((p, e))
    return tuple(key), factor


def _rad_add(a: dict, b: dict) -> dict:
    out = dict(a)
    for k, c in b.items():
        v = out.get(k, 0) + c
        if v:
            out[k] = v
        else:
            out.pop(k, None)
    return out


def _rad_mul(a: dict, b: dict) -> dict:
    out: dict = {}
    for k1, c1 in a.items():
        for k2, c2 in b.items():
            k, f = _key_mul(k1, k2)
            v = out.get(k, 0) + c1 * c2 * f
            if v:
                out[k] = v
            else:
                out.pop(k, None)
    return out


@lru_cache(maxsize=65536)
def _key_bounds(key: tuple, bits: int):
    lo = hi = Fraction(1)
    for p, a in key:
        m, n = a.numerator, a.denominator
        pm = Fraction(p) ** m
        lo *= _nth_root_floor(pm, n, bits)
        hi *= _nth_root_ceil(pm, n, bits)
    return lo, hi


def _rad_bounds(a: dict, bits: int):
    lo = hi = Fraction(0)
    for k, c in a.items():
        klo, khi = _key_bounds(k, bits)
        if c > 0:
            lo += c * klo
            hi += c * khi
        else:
            lo += c * khi
            hi += c * klo
    return lo, hi


def _rad_sign(a: dict) -> int:
    if not a:
        return 0
    if len(a) == 1:
        (c,) = a.values()
        return 1 if c > 0 else -1
    bits = 16
    while True:
        lo, hi = _rad_bounds(a, bits)
        if lo > 0:
            return 1
        if hi < 0:
            return -1
        bits *= 2


def _rad_recip(a: dict) -> dict:
    if len(a) == 1:
        ((key, c),) = a.items()
        inv_key = []
        factor = Fraction(1, c)
        for p, e in key:
            inv_key.append((p, 1 - e))
            factor /= p
        return {tuple(inv_key): factor}
    # solve a * y = 1 in the field Q(p^(1/n_p) : p)
    dens: dict = {}
    for key in a:
        for p, e in key:
            dens[p] = dens.get(p, 1) * e.denominator // _gcd(dens.get(p, 1), e.denominator)
    primes = sorted(dens)
    basis = [()]
    for p in primes:
        n = dens[p]
        basis = [tuple(sorted(b + (((p, Fraction(j, n)),) if j else ()))) for b in basis for j in range(n)]
    index = {b: i for i, b in enumerate(basis)}
    dim = len(basis)
    # column j = a * basis[j]
    mat = [[Fraction(0)] * (dim + 1) for _ in range(dim)]
    for j, b in enumerate(basis):
        for k, v in _rad_mul(a, {b: Fraction(1)}).items():
            mat[index[k]][j] = v
    mat[index[()]][dim] = Fraction(1)
    for col in range(dim):
        piv = next(r for r in range(col, dim) if mat[r][col])
        mat[col], mat[piv] = mat[piv], mat[col]
        pv = mat[col][col]
        row = [v / pv for v in mat[col]]
        mat[col] = row
        for r in range(dim):
            if r != col and mat[r][col]:
                f = mat[r][col]
                mat[r] = [u - f * w for u, w in zip(mat[r], row)]
    return {basis[i]: mat[i][dim] for i in range(dim) if mat[i][dim]}


def _rad_str(a: dict) -> str:
    parts = []
    for key, c in sorted(a.items(), key=lambda kv: kv[0]):
        mono = "*".join(f"{p}^({e})" for p, e in key)
        if not mono:
            parts.append(str(c))
        elif c == 1:
            parts.append(mono)
        elif c == -1:
            parts.append("-" + mono)
        else:
            parts.append(f"{c}*{mono}")
    return " + ".join(parts).replace("+ -", "- ")


# --------------------------------------------------------------------------


def _select(candidates, enclosure):
    """Pick the root lying in ``enclosure(k)`` for growing ``k``.

    ``enclosure(k)`` returns rational bounds (L, H) containing the exact
    value, with width tending to 0 as k grows.
    """
    cands = []
    for f in candidates:
        if len(f) == 2:
            r = Fraction(-f[1], f[0])
            cands.append([f, r, r])
        elif len(f) > 2:
            for lo, hi in _isolate(f):
                cands.append([f, lo, hi])
    k = 0
    while True:
        lo_e, hi_e = enclosure(k)
        cands = [c for c in cands if c[1] <= hi_e and lo_e <= c[2]]
        if not cands:
            raise ArithmeticError("root selection lost the true value")
        if len(cands) == 1:
            f, lo, hi = cands[0]
            if len(f) == 2:
                return AlgebraicReal._rational(lo)
            return AlgebraicReal._root(f, lo, hi)
        for c in cands:
            if len(c[0]) > 2:
                c[1], c[2] = _bisect(c[0], c[1], c[2])
        k += 1


@total_ordering
class AlgebraicReal:
    """An exact real algebraic number.

    >>> r = root(AlgebraicReal(2), 2)
    >>> r * r == 2
    True
    """

    __slots__ = ("_q", "_rad", "_poly", "_lo", "_hi", "_gen")

    def __init__(self, value=0):
        if isinstance(value, AlgebraicReal):
            for s in self.__slots__:
                setattr(self, s, getattr(value, s))
            return
        self._q = Fraction(value)
        self._rad = self._poly = self._lo = self._hi = self._gen = None

    @classmethod
    def _rational(cls, q: Fraction) -> "AlgebraicReal":
        obj = cls.__new__(cls)
        obj._q = q
        obj._rad = obj._poly = obj._lo = obj._hi = obj._gen = None
        return obj

    @classmethod
    def _root(cls, poly: Poly, lo: Fraction, hi: Fraction) -> "AlgebraicReal":
        obj = cls.__new__(cls)
        obj._q = obj._rad = obj._gen = None
        obj._poly = poly
        obj._lo, obj._hi = lo, hi
        return obj

    @classmethod
    def _radical(cls, rad: dict) -> "AlgebraicReal":
        if not rad:
            return cls._rational(Fraction(0))
        if len(rad) == 1 and () in rad:
            return cls._rational(rad[()])
        obj = cls.__new__(cls)
        obj._q = obj._poly = obj._lo = obj._hi = obj._gen = None
        obj._rad = rad
        return obj

    @classmethod
    def from_poly(cls, coeffs, lo, hi) -> "AlgebraicReal":
        """The unique root of ``coeffs`` (integers, highest first) in (lo, hi)."""
        lo, hi = Fraction(lo), Fraction(hi)
        cands = []
        for f in _factors(_primitive(coeffs)):
            if len(f) == 2:
                r = Fraction(-f[1], f[0])
                cands.append([f, r, r])
            elif len(f) > 2:
                cands.extend([f, a, b] for a, b in _isolate(f))
        while True:
            cands = [c for c in cands if c[1] < hi and lo < c[2]]
            inside = [c for c in cands if lo < c[1] and c[2] < hi]
            if len(inside) == len(cands):
                break
            for c in cands:
                if c not in inside:
                    c[1], c[2] = _bisect(c[0], c[1], c[2])
        if len(cands) != 1:
            raise ValueError(f"{list(coeffs)} has {len(cands)} roots in ({lo}, {hi}), expected 1")
        f, a, b = cands[0]
        if len(f) == 2:
            return cls._rational(a)
        return cls._root(f, a, b)

    # -- structure -------------------------------------------------------

    @property
    def is_rational(self) -> bool:
        return self._q is not None

    def as_fraction(self) -> Fraction:
        if self._q is None:
            raise ValueError("not a rational number")
        return self._q

    def _as_rad(self):
        if self._q is not None:
            return {(): self._q} if self._q else {}
        return self._rad

    def _generic(self) -> "AlgebraicReal":
        """Same number in the minpoly + interval representation."""
        if self._rad is None:
            return self
        if self._gen is None:
            total = None
            for key, c in self._rad.items():
                term = AlgebraicReal._rational(c)
                for p, a in key:
                    m, n = a.numerator, a.denominator
                    term = term * _generic_nth_root(Fraction(p) ** m, n)
                total = term if total is None else total + term
            self._gen = total
        return self._gen

    @property
    def minpoly(self) -> Poly:
        if self._q is not None:
            return (self._q.denominator, -self._q.numerator)
        return self._generic()._poly

    @property
    def interval(self):
        if self._q is not None:
            return self._q - 1, self._q + 1
        g = self._generic()
        return g._lo, g._hi

    @property
    def degree(self) -> int:
        return len(self.minpoly) - 1

    def refined(self, width: Fraction) -> "AlgebraicReal":
        """Same number with an isolating interval narrower than ``width``."""
        g = self._generic()
        if g._q is not None:
            return g
        lo, hi = g._lo, g._hi
        while hi - lo >= width:
            lo, hi = _bisect(g._poly, lo, hi)
        return AlgebraicReal._root(g._poly, lo, hi)

    def _refiner(self):
        """Closure k -> (lo, hi) with width shrinking as k grows."""
        if self._q is not None:
            q = self._q
            return lambda k: (q, q)
        if self._rad is not None:
            rad = self._rad
            return lambda k: _rad_bounds(rad, 8 + 4 * k)
        state = [self._lo, self._hi, 0]
        p = self._poly

        def at(k):
            while state[2] < k:
                state[0], state[1] = _bisect(p, state[0], state[1])
                state[2] += 1
            return state[0], state[1]
        return at

    def _nonzero_bounds(self):
        at = self._refiner()
        k = 0
        while True:
            lo, hi = at(k)
            if lo > 0 or hi < 0:
                return lo, hi
            k += 1

    def sign(self) -> int:
        if self._q is not None:
            return (self._q > 0) - (self._q < 0)
        if self._rad is not None:
            return _rad_sign(self._rad)
        lo, _ = self._nonzero_bounds()
        return 1 if lo > 0 else -1

    # -- comparison ------------------------------------------------------

    def compare(self, other) -> Ordering:
        other = as_algebraic(other)
        if self._q is not None and other._q is not None:
            return Ordering.of((self._q > other._q) - (self._q < other._q))
        if self._poly is None and other._poly is None:
            return Ordering.of(_rad_sign(_rad_add(self._as_rad(), {k: -v for k, v in other._as_rad().items()})))
        a, b = self._generic(), other._generic()
        if a._q is not None and b._q is not None:
            return Ordering.of((a._q > b._q) - (a._q < b._q))
        if a._q is None and b._q is None and a._poly == b._poly:
            lo, hi = max(a._lo, b._lo), min(a._hi, b._hi)
            if lo <= hi and _count_roots(a._poly, lo, hi) == 1:
                return Ordering.EQUAL
        ra, rb = a._refiner(), b._refiner()
        k = 0
        while True:
            alo, ahi = ra(k)
            blo, bhi = rb(k)
            if ahi < blo:
                return Ordering.LESS
            if bhi < alo:
                return Ordering.GREATER
            k += 1

    def __eq__(self, other):
        try:
            other = as_algebraic(other)
        except TypeError:
            return NotImplemented
        return self.compare(other) == Ordering.EQUAL

    def __lt__(self, other):
        try:
            other = as_algebraic(other)
        except TypeError:
            return NotImplemented
        return self.compare(other) == Ordering.LESS

    def __hash__(self):
        if self._q is not None:
            return hash(self._q)
        # floor(v * 2^32) is exact and equal for equal numbers
        at = self._refiner()
        k = 0
        while True:
            lo, hi = at(k)
            a, b = floor(lo * 2 ** 32), floor(hi * 2 ** 32)
            if a == b:
                return hash(("alg", a))
            k += 1

    def __bool__(self):
        if self._q is not None:
            return self._q != 0
        return True

    # -- arithmetic ------------------------------------------------------

    def __neg__(self):
        if self._q is not None:
            return AlgebraicReal._rational(-self._q)
        if self._rad is not None:
            return AlgebraicReal._radical({k: -v for k, v in self._rad.items()})
        p = self._poly
        deg = len(p) - 1
        return AlgebraicReal._root(_primitive(c * (-1) ** (deg - i) for i, c in enumerate(p)),
                                   -self._hi, -self._lo)

    def __add__(self, other):
        try:
            other = as_algebraic(other)
        except TypeError:
            return NotImplemented
        if self._q is not None and other._q is not None:
            return AlgebraicReal._rational(self._q + other._q)
        if self._poly is None and other._poly is None:
            return AlgebraicReal._radical(_rad_add(self._as_rad(), other._as_rad()))
        a, b = self._generic(), other._generic()
        if a._q is not None:
            a, b = b, a
        if b._q is not None:
            if b._q == 0:
                return a
            r = b._q
            return AlgebraicReal._root(_compose_linear(a._poly, Fraction(1), -r), a._lo + r, a._hi + r)
        ra, rb = a._refiner(), b._refiner()

        def enclosure(k):
            alo, ahi = ra(k)
            blo, bhi = rb(k)
            return alo + blo, ahi + bhi
        return _select(_sum_candidates(a._poly, b._poly), enclosure)

    __radd__ = __add__

    def __sub__(self, other):
        try:
            other = as_algebraic(other)
        except TypeError:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return as_algebraic(other) + (-self)

    def __mul__(self, other):
        try:
            other = as_algebraic(other)
        except TypeError:
            return NotImplemented
        if self._q is not None and other._q is not None:
            return AlgebraicReal._rational(self._q * other._q)
        if self._poly is None and other._poly is None:
            return AlgebraicReal._radical(_rad_mul(self._as_rad(), other._as_rad()))
        a, b = self._generic(), other._generic()
        if a._q is not None:
            a, b = b, a
        if b._q is not None:
            r = b._q
            if r == 0:
                return AlgebraicReal._rational(Fraction(0))
            if r == 1:
                return a
            lo, hi = a._lo * r, a._hi * r
            if r < 0:
                lo, hi = hi, lo
            return AlgebraicReal._root(_compose_linear(a._poly, 1 / r, Fraction(0)), lo, hi)
        ra, rb = a._refiner(), b._refiner()

        def enclosure(k):
            alo, ahi = ra(k)
            blo, bhi = rb(k)
            ps = (alo * blo, alo * bhi, ahi * blo, ahi * bhi)
            return min(ps), max(ps)
        return _select(_prod_candidates(a._poly, b._poly), enclosure)

    __rmul__ = __mul__

    def recip(self) -> "AlgebraicReal":
        if self._q is not None:
            if self._q == 0:
                raise DivisionByZero("reciprocal of zero")
            return AlgebraicReal._rational(1 / self._q)
        if self._rad is not None:
            return AlgebraicReal._radical(_rad_recip(self._rad))
        lo, hi = self._nonzero_bounds()
        return AlgebraicReal._root(_primitive(reversed(self._poly)), 1 / hi, 1 / lo)

    def __truediv__(self, other):
        try:
            other = as_algebraic(other)
        except TypeError:
            return NotImplemented
        return self * other.recip()

    def __rtruediv__(self, other):
        return as_algebraic(other) * self.recip()

    def __pow__(self, exponent):
        q = Fraction(exponent)
        if q.denominator == 1:
            return _int_pow(self, q.numerator)
        return pow_rational(self, q)

    # -- rendering -------------------------------------------------------

    def to_decimal(self, digits: int = 10) -> str:
        """Decimal approximation to ``digits`` places; display only."""
        if self._q is not None:
            mid = self._q
        else:
            at = self._refiner()
            k = 0
            while True:
                lo, hi = at(k)
                if hi - lo < Fraction(1, 10 ** (digits + 1)):
                    break
                k += 1
            mid = (lo + hi) / 2
        scaled = round(mid * 10 ** digits)
        sign = "-" if scaled < 0 else ""
        whole, frac = divmod(abs(scaled), 10 ** digits)
        return f"{sign}{whole}.{frac:0{digits}d}" if digits else f"{sign}{whole}"

    def __float__(self):
        if self._q is not None:
            return float(self._q)
        return float(self.to_decimal(17))

    def radical_form(self):
        """Radical expression string when the value is a radical combination."""
        if self._q is not None:
            return str(self._q)
        if self._rad is not None:
            return _rad_str(self._rad)
        return None

    def __str__(self):
        if self._q is not None:
            return str(self._q)
        g = self._generic()
        return (f"algebraic(minpoly={_poly_str(g._poly)}, interval=[{g._lo},{g._hi}])"
                f" ~ {self.to_decimal(6)}")

    def __repr__(self):
        if self._q is not None:
            return f"AlgebraicReal({str(self._q)!r})"
        if self._rad is not None:
            return f"AlgebraicReal<{_rad_str(self._rad)}>"
        return f"AlgebraicReal.from_poly({list(self._poly)}, {str(self._lo)!r}, {str(self._hi)!r})"


def _generic_nth_root(r: Fraction, n: int) -> AlgebraicReal:
    """Positive n-th root of a positive rational via its defining polynomial."""
    exact = _exact_nth_root(r, n)
    if exact is not None:
        return AlgebraicReal._rational(exact)
    poly = _from_fractions([r.denominator] + [0] * (n - 1) + [-r.numerator])

    def enclosure(k):
        bits = 4 + 2 * k
        return _nth_root_floor(r, n, bits), _nth_root_ceil(r, n, bits)
    return _select(_factors(poly), enclosure)


def _poly_str(p: Poly, var: str = "x") -> str:
    deg = len(p) - 1
    parts = []
    for i, c in enumerate(p):
        if c == 0:
            continue
        e = deg - i
        mono = "" if e == 0 else var if e == 1 else f"{var}^{e}"
        mag = abs(c)
        body = (str(mag) if (mag != 1 or not mono) else "") + ("*" if mag != 1 and mono else "") + mono
        parts.append(("-" if c < 0 else "+", body))
    out = ("-" if parts[0][0] == "-" else "") + parts[0][1]
    for sign, body in parts[1:]:
        out += f" {sign} {body}"
    return out


def as_algebraic(v) -> AlgebraicReal:
    if isinstance(v, AlgebraicReal):
        return v
    if isinstance(v, (int, Fraction, _RationalABC, str)) and not isinstance(v, bool):
        return AlgebraicReal._rational(Fraction(v))
    raise TypeError(f"cannot interpret {v!r} as an algebraic real")


def _int_pow(a: AlgebraicReal, m: int) -> AlgebraicReal:
    if m < 0:
        return _int_pow(a.recip(), -m)
    if m == 0:
        return AlgebraicReal._rational(Fraction(1))
    if a._q is not None:
        return AlgebraicReal._rational(a._q ** m)
    if m == 1:
        return a
    if a._rad is not None:
        result, base = {(): Fraction(1)}, a._rad
        while m:
            if m & 1:
                result = _rad_mul(result, base)
            m >>= 1
            if m:
                base = _rad_mul(base, base)
        return AlgebraicReal._radical(result)
    lo, hi = a._nonzero_bounds()
    state = [lo, hi, 0]
    p = a._poly

    def enclosure(k):
        while state[2] < k:
            state[0], state[1] = _bisect(p, state[0], state[1])
            state[2] += 1
        ends = (state[0] ** m, state[1] ** m)
        return min(ends), max(ends)
    return _select(_power_candidates(a._poly, m), enclosure)


# --------------------------------------------------------------------------
# functional API


def add(a, b) -> AlgebraicReal:
    return as_algebraic(a) + as_algebraic(b)


def mul(a, b) -> AlgebraicReal:
    return as_algebraic(a) * as_algebraic(b)


def neg(a) -> AlgebraicReal:
    return -as_algebraic(a)


def recip(a) -> AlgebraicReal:
    return as_algebraic(a).recip()


def cmp(a, b) -> Ordering:
    return as_algebraic(a).compare(b)


def root(a, n: int) -> AlgebraicReal:
    """Real n-th root: positive root for a > 0, real root for a < 0 and odd n."""
    a = as_algebraic(a)
    if n < 1:
        raise ValueError("root index must be a positive integer")
    if n == 1:
        return a
    s = a.sign()
    if s == 0:
        if n % 2 == 0:
            raise NegativeRadicand("even root of zero is excluded by the positivity precondition")
        return a
    if s < 0:
        if n % 2 == 0:
            raise NegativeRadicand(f"even root of a negative number: {a}")
        return -root(-a, n)
    if a._q is not None:
        return AlgebraicReal._radical(_radical_power(a._q, Fraction(1, n)))
    if a._rad is not None and len(a._rad) == 1:
        ((key, c),) = a._rad.items()
        out = _radical_power(c, Fraction(1, n))
        return AlgebraicReal._radical(_rad_mul(out, {(): Fraction(1)}) if not key else
                                      _rad_mul(out, _key_root(key, n)))
    g = a._generic()
    if g._q is not None:
        return root(g, n)
    lo, hi = g._nonzero_bounds()
    st = [lo, hi, 0]

    def refine(k):
        while st[2] < k:
            st[0], st[1] = _bisect(g._poly, st[0], st[1])
            st[2] += 1
        return st[0], st[1]

    def enclosure(k):
        lo, hi = refine(k)
        bits = 4 + 2 * k
        return _nth_root_floor(lo, n, bits), _nth_root_ceil(hi, n, bits)
    return _select(_root_candidates(g._poly, n), enclosure)


def _key_root(key: tuple, n: int) -> dict:
    # (prod p^a)^(1/n) = prod p^(a/n), each a/n in (0, 1)
    return {tuple((p, a / n) for p, a in key): Fraction(1)}


def pow_rational(a, q) -> AlgebraicReal:
    """``a ** q`` for rational ``q``; the real branch, positive when a > 0."""
    a = as_algebraic(a)
    q = Fraction(q)
    if q == 0:
        return AlgebraicReal._rational(Fraction(1))
    if q.denominator > 1 and q.denominator % 2 == 0 and a.sign() < 0:
        raise NegativeRadicand(f"{a} ** {q} is not real")
    return root(_int_pow(a, q.numerator), q.denominator)


class RationalBackend:
    """Cheaper coefficient backend over plain rationals.

    Same operations as the module functions; ``root`` raises
    :class:`RootNotRepresentable` when the result is irrational.
    """

    zero = Fraction(0)
    one = Fraction(1)

    add = staticmethod(lambda a, b: Fraction(a) + Fraction(b))
    mul = staticmethod(lambda a, b: Fraction(a) * Fraction(b))
    neg = staticmethod(lambda a: -Fraction(a))

    @staticmethod
    def recip(a):
        if a == 0:
            raise DivisionByZero("reciprocal of zero")
        return 1 / Fraction(a)

    @staticmethod
    def cmp(a, b):
        a, b = Fraction(a), Fraction(b)
        return Ordering.of((a > b) - (a < b))

    @staticmethod
    def root(a, n):
        a = Fraction(a)
        if a < 0 and n % 2 == 0:
            raise NegativeRadicand(f"even root of a negative number: {a}")
        r = _exact_nth_root(a, n)
        if r is None:
            raise RootNotRepresentable(f"{a} has no rational {n}-th root")
        return r

    @staticmethod
    def pow_rational(a, q):
        q = Fraction(q)
        return RationalBackend.root(Fraction(a) ** q.numerator, q.denominator)
