"""Lazy Puiseux germs at +infinity.

A germ is a memoized stream of *steps* ``(exponent, coefficient)`` with
strictly decreasing rational exponents on the grid ``(1/d) Z``.  Steps may
carry a zero coefficient: these are progress markers meaning "nothing at or
above this exponent that has not been reported yet".  Markers are what keeps
every stream productive (each step is produced in finite time) even when a
result cancels to zero, e.g. ``f - f`` for an infinite ``f``.  A stream that
ends is an exact finite series.

Everything infinite is built from one primitive, :func:`_lazy_sum`, which
merges a (possibly infinite) sequence of streams whose head bounds decrease
to -infinity.  The bounded grid guarantees that finitely many streams can
contribute at any single exponent.
"""
from __future__ import annotations

import heapq
import itertools
import os
import threading
from dataclasses import dataclass, field
from fractions import Fraction
from math import floor, gcd
from typing import Callable, Iterator

from .coeff import AlgebraicReal, Ordering, as_algebraic, pow_rational
from .errors import (
    FuelExhausted,
    NonPositiveLeading,
    NotInfinitelyIncreasing,
    ZeroCoefficient,
    ZeroDivisor,
)

DEFAULT_FUEL = 32

ZERO = AlgebraicReal(0)
ONE = AlgebraicReal(1)


def _lcm(a: int, b: int) -> int:
    return a * b // gcd(a, b)


@dataclass(frozen=True)
class Fuel:
    """Per-query budget of stream steps."""

    max_terms: int = DEFAULT_FUEL

    def __post_init__(self):
        if self.max_terms < 1:
            raise ValueError("fuel must be at least 1")


def default_fuel() -> Fuel:
    env = os.environ.get("GOG_DEFAULT_FUEL")
    if env:
        return Fuel(int(env))
    return Fuel(DEFAULT_FUEL)


def _fuel(fuel) -> Fuel:
    if fuel is None:
        return default_fuel()
    if isinstance(fuel, Fuel):
        return fuel
    return Fuel(int(fuel))


@dataclass(frozen=True)
class Term:
    exponent: Fraction
    coefficient: AlgebraicReal

    def __iter__(self):
        return iter((self.exponent, self.coefficient))


@dataclass(frozen=True)
class EqualToDepth:
    """No difference found within ``depth`` steps; ``exact`` if the difference stream ended."""

    depth: int
    exact: bool = field(default=False, compare=False)


class Germ:
    """A lazily expanded Puiseux series, memoized and safe to share between threads."""

    __slots__ = ("_factory", "_it", "_cache", "_done", "_lock", "top", "ramification", "origin", "shape")

    def __init__(self, factory: Callable[[], Iterator], top, ramification: int, origin: str):
        self._factory = factory
        self._it = None
        self._cache: list = []
        self._done = False
        self._lock = threading.RLock()
        self.top = Fraction(top)
        self.ramification = int(ramification)
        self.origin = origin
        # closed form (p, t) when the germ is (x^p + t)^(1/p); enables exact shortcuts
        self.shape = None

    # -- stream access ---------------------------------------------------

    def step(self, i: int):
        """The i-th raw step, or None if the stream has fewer steps."""
        cache = self._cache
        if i < len(cache):
            return cache[i]
        with self._lock:
            while len(cache) <= i and not self._done:
                if self._it is None:
                    self._it = iter(self._factory())
                nxt = next(self._it, None)
                if nxt is None:
                    self._done = True
                    self._it = None
                    self._factory = None
                else:
                    cache.append(nxt)
            return cache[i] if i < len(cache) else None

    def steps(self) -> Iterator:
        i = 0
        while True:
            st = self.step(i)
            if st is None:
                return
            yield st
            i += 1

    @property
    def computed(self) -> int:
        return len(self._cache)

    def known_finite(self) -> bool:
        return self._done

    def is_exact_zero(self, fuel=None) -> bool:
        """True if the stream provably ends with only zero steps within the budget."""
        budget = _fuel(fuel).max_terms
        for i in range(budget):
            st = self.step(i)
            if st is None:
                return True
            if st[1]:
                return False
        return False

    def nonzero_terms(self, n: int, fuel=None) -> list:
        """Up to ``n`` nonzero terms, scanning at most ``n + fuel`` raw steps."""
        budget = n + _fuel(fuel).max_terms
        out = []
        for i in range(budget):
            st = self.step(i)
            if st is None:
                break
            if st[1]:
                out.append(Term(*st))
                if len(out) == n:
                    break
        return out

    # -- operators -------------------------------------------------------

    def __add__(self, other):
        return add(self, _coerce(other))

    __radd__ = __add__

    def __sub__(self, other):
        return sub(self, _coerce(other))

    def __rsub__(self, other):
        return sub(_coerce(other), self)

    def __neg__(self):
        return scale(self, -ONE, Fraction(0))

    def __mul__(self, other):
        if isinstance(other, Germ):
            return mul(self, other)
        return scale(self, as_algebraic(other), Fraction(0))

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, Germ):
            return mul(self, recip(other))
        return scale(self, as_algebraic(other).recip(), Fraction(0))

    def __rtruediv__(self, other):
        return mul(_coerce(other), recip(self))

    def __pow__(self, q):
        return rational_power(self, Fraction(q))

    def __matmul__(self, other):
        return compose(self, _coerce(other))

    def __call__(self, other):
        return compose(self, _coerce(other))

    def __repr__(self):
        return f"Germ({self.origin})"

    def __str__(self):
        return render(self, 6)


def _coerce(v) -> Germ:
    if isinstance(v, Germ):
        return v
    return constant(v)


def _paren(origin: str) -> str:
    if origin.replace("_", "").replace("/", "").replace("^", "").replace("(", "").replace(")", "").isalnum():
        return origin
    return f"({origin})"


# --------------------------------------------------------------------------
# the merge primitive


def _lazy_sum(families) -> Iterator:
    """Merge streams ``(bound, steps)`` whose bounds are non-increasing.

    Every step of a family's stream has exponent <= its bound.  Emits summed
    steps with strictly decreasing exponents, including zero markers.
    """
    heap: list = []
    counter = itertools.count()
    fam = iter(families)
    pending = next(fam, None)
    last = None
    push = heapq.heappush
    pop = heapq.heappop
    while True:
        while pending is not None and (not heap or pending[0] >= -heap[0][0]):
            bound, it = pending
            pending = next(fam, None)
            st = next(it, None)
            if st is not None:
                push(heap, (-st[0], next(counter), st[1], it))
            elif not heap and (pending is None or pending[0] < bound) and (last is None or bound < last):
                last = bound
                yield (bound, ZERO)
        if not heap:
            if pending is None:
                return
            continue
        neg_e, _, total, it = pop(heap)
        if last is not None and -neg_e >= last:
            raise RuntimeError(f"stream bound violated: exponent {-neg_e} after {last}")
        st = next(it, None)
        if st is not None:
            push(heap, (-st[0], next(counter), st[1], it))
        while heap and heap[0][0] == neg_e:
            _, _, c, it2 = pop(heap)
            total = total + c
            st = next(it2, None)
            if st is not None:
                push(heap, (-st[0], next(counter), st[1], it2))
        last = -neg_e
        yield (last, total)


# --------------------------------------------------------------------------
# constructors


def _finite(terms, origin: str) -> Germ:
    """Germ from explicit (exponent, coefficient) pairs; zero coefficients dropped."""
    acc: dict = {}
    for e, c in terms:
        e = Fraction(e)
        acc[e] = acc.get(e, ZERO) + as_algebraic(c)
    items = sorted(((e, c) for e, c in acc.items() if c), key=lambda t: -t[0])
    top = items[0][0] if items else Fraction(0)
    d = 1
    for e, _ in items:
        d = _lcm(d, e.denominator)
    return Germ(lambda: iter(items), top, d, origin)


def from_terms(terms, origin: str | None = None) -> Germ:
    """Finite germ from (exponent, coefficient) pairs."""
    terms = list(terms)
    if origin is None:
        origin = " + ".join(_term_str(Fraction(e), as_algebraic(c)) for e, c in terms) or "0"
    return _finite(terms, origin)


def x() -> Germ:
    return _finite([(1, ONE)], "x")


def constant(c) -> Germ:
    c = as_algebraic(c)
    return _finite([(0, c)], _coeff_str(c))


def zero() -> Germ:
    return _finite([], "0")


def monomial(c, q) -> Germ:
    c = as_algebraic(c)
    q = Fraction(q)
    if not c:
        raise ZeroCoefficient("monomial with zero coefficient")
    return _finite([(q, c)], _term_str(q, c))


# --------------------------------------------------------------------------
# ring operations


def add(f: Germ, g: Germ) -> Germ:
    def gen():
        return _lazy_sum(sorted([(f.top, f.steps()), (g.top, g.steps())], key=lambda t: -t[0]))
    return Germ(gen, max(f.top, g.top), _lcm(f.ramification, g.ramification),
                f"{f.origin} + {g.origin}")


def sub(f: Germ, g: Germ) -> Germ:
    h = add(f, -g)
    h.origin = f"{f.origin} - {_paren(g.origin)}"
    return h


def scale(f: Germ, c: AlgebraicReal, shift: Fraction) -> Germ:
    """c * x^shift * f."""
    c = as_algebraic(c)
    shift = Fraction(shift)
    if not c:
        return zero()

    def gen():
        for e, a in f.steps():
            yield (e + shift, a * c if a else ZERO)
    d = _lcm(f.ramification, shift.denominator)
    origin = f.origin if (c == 1 and shift == 0) else f"{_term_str(shift, c)}*{_paren(f.origin)}"
    if c == -1 and shift == 0:
        origin = f"-{_paren(f.origin)}"
    return Germ(gen, f.top + shift, d, origin)


def mul(f: Germ, g: Germ) -> Germ:
    def families():
        for e, c in f.steps():
            if c:
                yield (e + g.top, scale(g, c, e).steps())
            else:
                yield (e + g.top, iter(()))

    return Germ(lambda: _lazy_sum(families()), f.top + g.top,
                _lcm(f.ramification, g.ramification), f"{_paren(f.origin)}*{_paren(g.origin)}")


def _lead_index(f: Germ, fuel: Fuel):
    for i in range(fuel.max_terms):
        st = f.step(i)
        if st is None:
            return None
        if st[1]:
            return i
    raise FuelExhausted(f"no nonzero term of {f.origin} within {fuel.max_terms} steps")


def leading(f: Germ, fuel=None) -> Term:
    fuel = _fuel(fuel)
    i = _lead_index(f, fuel)
    if i is None:
        raise FuelExhausted(f"{f.origin} is zero")
    return Term(*f.step(i))


class _Unit:
    """Factorisation f = c x^e (1 + u) with u infinitesimal, plus memoized powers of u."""

    def __init__(self, f: Germ, fuel: Fuel):
        i = _lead_index(f, fuel)
        if i is None:
            raise ZeroDivisor(f"{f.origin} is zero")
        self.e, self.c = f.step(i)
        e, inv_c = self.e, self.c.recip()
        d = f.ramification

        # skip leading zero steps of u so its bound can be its true leading exponent
        start, top = i + 1, Fraction(-1, d)
        for j in range(i + 1, i + 1 + fuel.max_terms):
            st = f.step(j)
            if st is None or st[1]:
                if st is not None:
                    start, top = j, st[0] - e
                break

        def tail():
            j = start
            while True:
                st = f.step(j)
                if st is None:
                    return
                yield (st[0] - e, st[1] * inv_c if st[1] else ZERO)
                j += 1
        self.u = Germ(tail, top, d, f"u[{f.origin}]")
        self.fuel = fuel
        self._powers = [_finite([(0, ONE)], "1")]
        self._u_zero = None
        self._lock = threading.Lock()

    def u_is_zero(self) -> bool:
        if self._u_zero is None:
            self._u_zero = self.u.is_exact_zero(self.fuel)
        return self._u_zero

    def power(self, k: int) -> Germ:
        with self._lock:
            while len(self._powers) <= k:
                n = len(self._powers)
                half = n // 2
                # balanced products keep stream nesting logarithmic in k
                self._powers.append(mul(self._powers[half], self._powers[n - half]) if half else self.u)
            return self._powers[k]

    def series(self, coeffs: Iterator) -> Iterator:
        """Steps of sum_k a_k u^k; ``coeffs`` yields a_k and may stop."""
        top_u = self.u.top

        def families():
            for k, a in enumerate(coeffs):
                if k >= 1 and self.u_is_zero():
                    return
                if a:
                    yield (k * top_u, scale(self.power(k), a, Fraction(0)).steps())
                else:
                    yield (k * top_u, iter(()))
        return _lazy_sum(families())


def _binomials(q: Fraction) -> Iterator:
    c = Fraction(1)
    k = 0
    while True:
        yield AlgebraicReal(c)
        if q.denominator == 1 and 0 <= q.numerator <= k:
            return
        c = c * (q - k) / (k + 1)
        k += 1


def _power_from_unit(unit: _Unit, q: Fraction, origin: str, d: int) -> Germ:
    e, c = unit.e, unit.c
    if c.sign() <= 0 and q.denominator != 1:
        raise NonPositiveLeading(f"leading coefficient {c} of {origin} is not positive")
    cq = pow_rational(c, q) if q.denominator != 1 else c ** q
    shift = e * q

    def gen():
        for ex, a in unit.series(_binomials(q)):
            yield (ex + shift, a * cq if a else ZERO)
    return Germ(gen, shift, _lcm(d, shift.denominator), origin)


def recip(f: Germ, fuel=None) -> Germ:
    unit = _Unit(f, _fuel(fuel))
    inv_c = unit.c.recip()
    e = unit.e

    def alternating():
        sign = ONE
        while True:
            yield sign
            sign = -sign

    def gen():
        for ex, a in unit.series(alternating()):
            yield (ex - e, a * inv_c if a else ZERO)
    return Germ(gen, -e, f.ramification, f"1/{_paren(f.origin)}")


def rational_power(f: Germ, q, fuel=None) -> Germ:
    q = Fraction(q)
    if q == 0:
        return constant(1)
    if q == 1:
        return f
    if f.shape is not None and f.shape[0] == q:
        return add(monomial(1, q), constant(f.shape[1]))
    unit = _Unit(f, _fuel(fuel))
    qs = str(q) if q.denominator == 1 and q > 0 else f"({q})"
    return _power_from_unit(unit, q, f"{_paren(f.origin)}^{qs}", f.ramification)


def derive(f: Germ) -> Germ:
    def gen():
        for e, c in f.steps():
            yield (e - 1, c * e if (c and e) else ZERO)
    return Germ(gen, f.top - 1, f.ramification, f"D({f.origin})")


# --------------------------------------------------------------------------
# composition and inversion


def _positive_infinite(b: Germ, fuel: Fuel) -> _Unit:
    try:
        unit = _Unit(b, fuel)
    except ZeroDivisor:
        raise NotInfinitelyIncreasing(f"{b.origin} is zero") from None
    if unit.e <= 0 or unit.c.sign() <= 0:
        raise NotInfinitelyIncreasing(f"{b.origin} is not > R (leading term {_term_str(unit.e, unit.c)})")
    return unit


def compose(a: Germ, b: Germ, fuel=None) -> Germ:
    """a o b for b > R."""
    if a.shape is not None:
        p, t = a.shape
        inner = rational_power(b, p, fuel)
        if b.shape is not None and b.shape[0] == p:
            return shifted_power(p, t + b.shape[1])
        g = rational_power(add(inner, constant(t)), 1 / p, fuel)
        g.origin = f"{_paren(a.origin)} @ {_paren(b.origin)}"
        return g
    unit = _positive_infinite(b, _fuel(fuel))
    e, c = unit.e, unit.c
    powers: dict = {}

    def power(q):
        p = powers.get(q)
        if p is None:
            if q == 0:
                p = constant(1)
            else:
                p = _power_from_unit(unit, q, "", b.ramification)
            powers[q] = p
        return p

    def families():
        for q, cq in a.steps():
            if cq:
                yield (e * q, scale(power(q), cq, Fraction(0)).steps())
            else:
                yield (e * q, iter(()))

    d = _lcm(b.ramification, a.ramification * e.denominator)
    return Germ(lambda: _lazy_sum(families()), e * a.top, d,
                f"{_paren(a.origin)} @ {_paren(b.origin)}")


def shifted_power(p, t) -> Germ:
    """``(x^p + t)^(1/p)`` for ``p > 0``, tagged with its closed form."""
    p = Fraction(p)
    t = as_algebraic(t)
    if p <= 0:
        raise ValueError("shifted_power needs p > 0")
    if not t:
        return x()
    if p == 1:
        g = add(x(), constant(t))
    else:
        g = rational_power(add(monomial(1, p), constant(t)), 1 / p)
    g.shape = (p, t)
    g.origin = f"(x^({p}) + {_coeff_str(t)})^({1 / p})"
    return g


def func_inverse(f: Germ, fuel=None) -> Germ:
    """Compositional inverse, one confirmed term per correction step."""
    if f.shape is not None:
        return shifted_power(f.shape[0], -f.shape[1])
    fuel = _fuel(fuel)
    unit = _positive_infinite(f, fuel)
    e, c = unit.e, unit.c
    inv_e = 1 / e
    c0 = pow_rational(c, -inv_e)
    # leading coefficient of f' o g
    dcoef = c * e * (c0 ** (e - 1) if (e - 1).denominator == 1 else pow_rational(c0, e - 1))
    shift = (e - 1) / e
    ident = x()

    grid = f.ramification * e.numerator

    def gen():
        terms = [(inv_e, c0)]
        yield terms[0]
        last = inv_e
        while True:
            r = sub(compose(f, _finite(terms, "g"), fuel), ident)
            i = 0
            while True:
                st = r.step(i)
                if st is None:
                    return
                if st[1]:
                    break
                # nothing in g above this grid point: emit a progress marker
                mark = Fraction(-floor(-(st[0] - shift) * grid), grid)
                if mark < last:
                    last = mark
                    yield (mark, ZERO)
                i += 1
            t = (st[0] - shift, -st[1] / dcoef)
            terms.append(t)
            last = t[0]
            yield t

    return Germ(gen, inv_e, grid, f"inv({f.origin})")


# --------------------------------------------------------------------------
# queries


def cmp(f: Germ, g: Germ, fuel=None):
    """Ordering.LESS / Ordering.GREATER, or EqualToDepth when no difference shows up."""
    fuel = _fuel(fuel)
    d = sub(f, g)
    for i in range(fuel.max_terms):
        st = d.step(i)
        if st is None:
            return EqualToDepth(fuel.max_terms, exact=True)
        if st[1]:
            return Ordering.of(st[1].sign())
    return EqualToDepth(fuel.max_terms)


def sign(f: Germ, fuel=None):
    return cmp(f, zero(), fuel)


def coeff_at(f: Germ, q, fuel=None) -> AlgebraicReal:
    q = Fraction(q)
    for e, c in f.steps():
        if e == q:
            return c
        if e < q:
            break
    return ZERO


def truncate(f: Germ, k: int, fuel=None) -> list:
    return f.nonzero_terms(k, fuel)


def equal_to_depth(f: Germ, g: Germ, n: int, fuel=None) -> bool:
    """True when the first ``n`` steps of ``f - g`` all vanish (or the difference ends)."""
    d = sub(f, g)
    for i in range(n):
        st = d.step(i)
        if st is None:
            return True
        if st[1]:
            return False
    return True


def lexp(f: Germ, fuel=None) -> Fraction:
    return leading(f, fuel).exponent


# --------------------------------------------------------------------------
# rendering


def _coeff_str(c: AlgebraicReal) -> str:
    rad = c.radical_form()
    if c.is_rational:
        return rad
    if rad is not None:
        return f"({rad})"
    return f"[{c}]"


def _exp_str(q: Fraction) -> str:
    if q == 1:
        return "x"
    if q.denominator == 1 and q > 0:
        return f"x^{q}"
    return f"x^({q})"


def _term_str(q: Fraction, c: AlgebraicReal) -> str:
    if q == 0:
        return _coeff_str(c)
    if c == 1:
        return _exp_str(q)
    if c == -1:
        return "-" + _exp_str(q)
    return f"{_coeff_str(c)}*{_exp_str(q)}"


def render(f: Germ, k: int = 6, fuel=None) -> str:
    """``c1*x^(q1) + c2*x^(q2) + ... + O(x^(qk))``."""
    fuel = _fuel(fuel)
    terms = []
    i = 0
    remainder = None
    budget = k + fuel.max_terms
    while i < budget:
        st = f.step(i)
        if st is None:
            break
        i += 1
        if st[1]:
            if len(terms) == k:
                remainder = st[0]
                break
            terms.append(Term(*st))
    else:
        nxt = f.step(i)
        if nxt is not None:
            remainder = nxt[0]
    out = ""
    for j, (q, c) in enumerate(terms):
        neg = c.sign() < 0
        body = _term_str(q, -c if neg else c)
        if j == 0:
            out = ("-" if neg else "") + body
        else:
            out += (" - " if neg else " + ") + body
    if remainder is not None:
        o = f"O({_exp_str(remainder)})" if remainder != 0 else "O(1)"
        out = f"{out} + {o}" if out else o
    return out or "0"


def terms_json(f: Germ, k: int, fuel=None) -> list:
    return [{"exponent": str(t.exponent), "coefficient": str(t.coefficient) if t.coefficient.is_rational
             else {"minpoly": list(t.coefficient.minpoly),
                   "interval": [str(v) for v in t.coefficient.interval],
                   "approx": t.coefficient.to_decimal(12)}}
            for t in truncate(f, k, fuel)]
