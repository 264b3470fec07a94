"""Differential checks on Puiseux germs viewed as an H-field with composition.

The valuation is read off leading exponents: ``f in o(g)`` iff
``lexp(f) < lexp(g)`` and ``f in O(g)`` iff ``lexp(f) <= lexp(g)``, with the
zero germ in both.  Checks return :class:`Report` objects that serialize to
JSON rather than raising on a failed identity.
"""
from __future__ import annotations

import math
from dataclasses import asdict, dataclass
from fractions import Fraction

from . import series as S
from .coeff import Ordering
from .errors import (
    FuelExhausted,
    LogarithmRequired,
    PreconditionViolated,
    ZeroDivisor,
)
from .series import EqualToDepth, Germ

__all__ = [
    "Report", "in_o", "in_O", "theta", "logderiv", "chain_rule_check", "taylor_check",
    "gap_check", "gap_margin", "approx_primitive", "conjugate_to_translation", "hf_axiom_check",
]


@dataclass
class Report:
    axiom: str
    sample: str
    status: str
    margin_exponent: str | None = None
    first_bad_term: str | None = None

    @property
    def passed(self) -> bool:
        return self.status == "pass"

    def to_json(self) -> dict:
        d = asdict(self)
        if d["first_bad_term"] is None:
            del d["first_bad_term"]
        return d


def _lexp_or_none(f: Germ, fuel):
    """Leading exponent, or None when ``f`` vanishes within the budget."""
    fuel = S._fuel(fuel)
    for i in range(fuel.max_terms):
        st = f.step(i)
        if st is None:
            return None
        if st[1]:
            return st[0]
    return None


def _denominator_lexp(g: Germ, fuel) -> Fraction:
    e = _lexp_or_none(g, fuel)
    if e is None:
        raise ZeroDivisor(f"{g.origin} has no nonzero term within fuel")
    return e


def in_o(f: Germ, g: Germ, fuel=None) -> bool:
    eg = _denominator_lexp(g, fuel)
    ef = _lexp_or_none(f, fuel)
    return ef is None or ef < eg


def in_O(f: Germ, g: Germ, fuel=None) -> bool:
    eg = _denominator_lexp(g, fuel)
    ef = _lexp_or_none(f, fuel)
    return ef is None or ef <= eg


def theta(f: Germ, g: Germ, fuel=None) -> bool:
    return in_O(f, g, fuel) and in_O(g, f, fuel)


def logderiv(f: Germ, fuel=None) -> Germ:
    return S.mul(S.derive(f), S.recip(f, fuel))


def _first_nonzero(d: Germ, depth: int):
    for i in range(depth):
        st = d.step(i)
        if st is None:
            return None
        if st[1]:
            return st
    return None


def chain_rule_check(a: Germ, b: Germ, depth: int = 10, fuel=None) -> Report:
    """``(a o b)' = (a' o b) b'`` on the first ``depth`` steps of the difference."""
    lhs = S.derive(S.compose(a, b, fuel))
    rhs = S.mul(S.compose(S.derive(a), b, fuel), S.derive(b))
    bad = _first_nonzero(S.sub(lhs, rhs), depth)
    sample = f"a={a.origin}; b={b.origin}"
    if bad is None:
        return Report("chain_rule", sample, "pass", "inf")
    return Report("chain_rule", sample, "fail", None, S._term_str(*bad))


def taylor_check(a: Germ, b: Germ, delta: Germ, n: int, depth: int = 10, fuel=None) -> Report:
    """Taylor axiom: the order-``n`` remainder lies in ``o((a^(n) o b) delta^n)``.

    The margin is ``lexp(bound) - lexp(remainder)``; a remainder vanishing
    on ``depth`` steps passes with margin ``inf``.
    """
    fuel = S._fuel(fuel)
    sample = f"a={a.origin}; b={b.origin}; delta={delta.origin}; n={n}"
    if not in_o(delta, b, fuel):
        raise PreconditionViolated("delta is not in o(b)")
    if not in_o(S.mul(S.compose(logderiv(a, fuel), b, fuel), delta), S.constant(1), fuel):
        raise PreconditionViolated("(a-dagger o b) * delta is not in o(1)")
    deriv = a
    approx = S.compose(a, b, fuel)
    power = S.constant(1)
    for k in range(1, n + 1):
        deriv = S.derive(deriv)
        power = S.mul(power, delta)
        term = S.mul(S.compose(deriv, b, fuel), power)
        approx = S.add(approx, S.scale(term, Fraction(1, math.factorial(k)), 0))
    remainder = S.sub(S.compose(a, S.add(b, delta), fuel), approx)
    bad = _first_nonzero(remainder, depth)
    if bad is None:
        return Report("HFC5", sample, "pass", "inf")
    e_bound = _lexp_or_none(S.mul(S.compose(deriv, b, fuel), power), fuel)
    if e_bound is None:
        return Report("HFC5", sample, "fail", None, S._term_str(*bad))
    margin = e_bound - bad[0]
    if margin > 0:
        return Report("HFC5", sample, "pass", str(margin))
    return Report("HFC5", sample, "fail", str(margin), S._term_str(*bad))


def gap_check(a: Germ, b: Germ, fuel=None) -> bool:
    """``b' in o(a-dagger)`` for infinitesimal ``a != 0`` and ``b``."""
    one = S.constant(1)
    if _lexp_or_none(a, fuel) is None:
        raise PreconditionViolated("a must be nonzero")
    if not in_o(a, one, fuel):
        raise PreconditionViolated("a is not in o(1)")
    if not in_o(b, one, fuel):
        raise PreconditionViolated("b is not in o(1)")
    return in_o(S.derive(b), logderiv(a, fuel), fuel)


def gap_margin(a: Germ, b: Germ, fuel=None):
    """``lexp(a-dagger) - lexp(b')``, or None when ``b'`` vanishes; positive iff the gap holds."""
    gap_check(a, b, fuel)
    eb = _lexp_or_none(S.derive(b), fuel)
    return None if eb is None else _denominator_lexp(logderiv(a, fuel), fuel) - eb


def approx_primitive(g: Germ, fuel=None):
    """Return ``(h, iota)`` with ``iota = h' - g``.

    Terms of ``g`` with exponent above -1 integrate termwise.  Unless the
    rest of ``g`` provably vanishes, a corrective monomial ``x^p`` replaces
    it; ``p = min(1/2, (lexp(g) + 1) / 2)`` keeps ``iota`` positive and in
    ``o(g)`` whenever ``lexp(g) > -1``.
    """
    fuel = S._fuel(fuel)
    lead = _lexp_or_none(g, fuel)
    if lead is None:
        raise ZeroDivisor(f"{g.origin} has no nonzero term within fuel")
    if lead == -1:
        raise LogarithmRequired(f"leading term of {g.origin} integrates to a logarithm")
    kept = []
    truncated = True
    for i, st in enumerate(g.steps()):
        if st[0] <= -1:
            truncated = not _tail_vanishes(g, i, fuel)
            break
        if st[1]:
            kept.append((st[0] + 1, st[1] / (st[0] + 1)))
        if i >= fuel.max_terms:
            break
    else:
        truncated = False
    if truncated:
        p = Fraction(1, 2) if lead < -1 else min(Fraction(1, 2), (lead + 1) / 2)
        kept.append((p, 1))
    h = S.from_terms(kept) if kept else S.zero()
    return h, S.sub(S.derive(h), g)


def _tail_vanishes(g: Germ, start: int, fuel) -> bool:
    for i in range(start, start + fuel.max_terms):
        st = g.step(i)
        if st is None:
            return True
        if st[1]:
            return False
    return False


def _level_exponent(delta: Germ, fuel) -> Fraction:
    e = _lexp_or_none(delta, fuel)
    if e is None:
        raise PreconditionViolated("g equals x to depth")
    return e


def conjugate_to_translation(g: Germ, depth: int = 6, fuel=None):
    """Find ``h`` with ``h o g o h^inv = x + 1 + eps``, ``eps > 0`` and ``eps in o(1)``.

    Conjugating first by a power map ``x^m`` pushes the displacement into
    ``O(x^-2)``; an approximate primitive of its reciprocal then straightens
    it.  The result is verified on ``depth`` terms before it is returned.
    """
    fuel = S._fuel(fuel)
    X = S.x()
    delta = S.sub(g, X)
    q = _level_exponent(delta, fuel)
    lead = S.leading(delta, fuel)
    if lead.coefficient.sign() <= 0 or q >= 1:
        raise PreconditionViolated("g must be x + delta with 0 < delta in o(x)")
    if S.sub(delta, S.constant(1)).is_exact_zero(fuel):
        return X, S.zero()
    m = 1
    while 1 + m * (q - 1) > -2:
        m += 1
    if m > 1:
        phi = S.monomial(1, m)
        g1 = S.compose(S.monomial(1, Fraction(1, m)), S.compose(g, phi, fuel), fuel)
    else:
        g1 = g
    delta1 = S.sub(g1, X)
    h0, _ = approx_primitive(S.recip(delta1, fuel), fuel)
    h = S.compose(h0, S.monomial(1, Fraction(1, m)), fuel) if m > 1 else h0
    conj = S.compose(h, S.compose(g, S.func_inverse(h, fuel), fuel), fuel)
    eps = S.sub(conj, S.add(X, S.constant(1)))
    _verify_translation(eps, depth, fuel)
    return h, eps


def _verify_translation(eps: Germ, depth: int, fuel):
    seen = 0
    first = None
    for i in range(depth + fuel.max_terms):
        st = eps.step(i)
        if st is None:
            break
        if st[1]:
            if first is None:
                first = st
            seen += 1
            if seen >= depth:
                break
    if first is None:
        raise FuelExhausted("conjugate equals x + 1 to depth; positivity of eps undecided")
    if first[0] >= 0 or first[1].sign() <= 0:
        raise PreconditionViolated(f"construction failed: eps leads with {S._term_str(*first)}")


def hf_axiom_check(samples, fuel=None) -> list:
    """HF1 on germs with ``lexp <= 0`` and HF2 on germs ``> R``; one report per applicable sample."""
    fuel = S._fuel(fuel)
    out = []
    one = S.constant(1)
    for f in samples:
        e = _lexp_or_none(f, fuel)
        if e is None or e <= 0:
            c = S.coeff_at(f, 0, fuel)
            rest = S.sub(f, S.constant(c))
            ok = in_o(rest, one, fuel)
            m = _lexp_or_none(rest, fuel)
            out.append(Report("HF1", f.origin, "pass" if ok else "fail",
                              "inf" if m is None else str(-m)))
        else:
            lead = S.leading(f, fuel)
            if lead.coefficient.sign() > 0:
                df = S.derive(f)
                s = S.cmp(df, S.zero(), fuel)
                ok = s == Ordering.GREATER
                # margin: how far the leading term of f' dominates the rest of f'
                d_lead = S.leading(df, fuel)
                rest = _lexp_or_none(S.sub(df, S.monomial(d_lead.coefficient, d_lead.exponent)), fuel)
                out.append(Report("HF2", f.origin, "pass" if ok else
                                  ("undecided" if isinstance(s, EqualToDepth) else "fail"),
                                  "inf" if rest is None else str(d_lead.exponent - rest)))
    return out
