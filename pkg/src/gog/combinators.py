"""Ordered groups as plain records of operations, with constructions and axiom suites.

A :class:`GroupSpec` bundles the five ordered-group capabilities plus
optional hooks that make the growth-order-group checks concrete:

``rank``
    rank of a non-identity element; any totally ordered key.
``dominates(f, g)``
    certifies ``f > C(g)`` (every element of the centralizer of ``g``).
``scaling(f)``
    returns ``(s, u, u_inv)``: a scaling element at the rank of ``f`` and an
    element ``u`` of its centralizer with ``u ~ f``.
``centralizer(f, rng)``
    samples an element commuting with ``f``.

Suites are randomized and bounded: a failure is a concrete counterexample,
"undecided" means the bound ran out.
"""
from __future__ import annotations

import random
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Callable

from . import gogcore as C
from . import series as S
from .coeff import Ordering, as_algebraic, pow_rational
from .errors import ActionViolation, GogError, NotConvex, NotInfinitelyIncreasing, NotNormal
from .sampling import random_coord, random_germ, small_rational
from .series import EqualToDepth

__all__ = [
    "GroupSpec", "HahnElem", "SemidirectElem", "AffElem",
    "hahn_group", "rationals", "positive_rationals", "integers",
    "semidirect", "check_mga", "aff_group", "semidirect_demo", "quotient",
    "puiseux_group", "leading_affine", "affine_product", "puiseux_mod_affine_kernel",
    "preceq_generic", "rank_disjoint_union_check", "gog_axiom_suite", "check_ordered_group",
]

LESS, EQUAL, GREATER = Ordering.LESS, Ordering.EQUAL, Ordering.GREATER


@dataclass
class GroupSpec:
    name: str
    op: Callable[[Any, Any], Any]
    identity: Any
    inverse: Callable[[Any], Any]
    compare: Callable[[Any, Any], Ordering]
    sampler: Callable[[random.Random], Any]
    archimedean_centralizers: bool = True
    abelian: bool = False
    render: Callable[[Any], str] = str
    rank: Callable[[Any], Any] | None = None
    dominates: Callable[[Any, Any], bool] | None = None
    scaling: Callable[[Any], tuple] | None = None
    centralizer: Callable[[Any, random.Random], Any] | None = None
    extra: dict = field(default_factory=dict)

    def eq(self, a, b) -> bool:
        return self.compare(a, b) == EQUAL

    def is_identity(self, a) -> bool:
        return self.eq(a, self.identity)

    def power(self, a, n: int):
        base = a if n >= 0 else self.inverse(a)
        out = self.identity
        for _ in range(abs(n)):
            out = self.op(base, out)
        return out

    def commutes(self, a, b) -> bool:
        return self.eq(self.op(a, b), self.op(b, a))

    def sample_positive(self, rng):
        while True:
            a = self.sampler(rng)
            c = self.compare(a, self.identity)
            if c == GREATER:
                return a
            if c == LESS:
                return self.inverse(a)


# --------------------------------------------------------------------------
# basic Abelian groups


def rationals(name: str = "Q") -> GroupSpec:
    return GroupSpec(
        name, lambda a, b: a + b, Fraction(0), lambda a: -a,
        lambda a, b: Ordering.of((a > b) - (a < b)),
        lambda rng: small_rational(rng, nonzero=False) * rng.randint(0, 4),
        abelian=True, rank=lambda a: 0,
        scaling=lambda a: (a, a, -a), centralizer=lambda a, rng: small_rational(rng),
    )


def positive_rationals(name: str = "Q>0") -> GroupSpec:
    """Multiplicative group of positive rationals."""
    def sample(rng):
        return Fraction(rng.randint(1, 6), rng.randint(1, 6))
    return GroupSpec(
        name, lambda a, b: a * b, Fraction(1), lambda a: 1 / a,
        lambda a, b: Ordering.of((a > b) - (a < b)), sample,
        abelian=True, rank=lambda a: 0,
        scaling=lambda a: (a, a, 1 / a), centralizer=lambda a, rng: sample(rng),
    )


def integers(name: str = "Z") -> GroupSpec:
    return GroupSpec(
        name, lambda a, b: a + b, 0, lambda a: -a,
        lambda a, b: Ordering.of((a > b) - (a < b)),
        lambda rng: rng.randint(-3, 3),
        abelian=True, rank=lambda a: 0,
        scaling=lambda a: (a, a, -a), centralizer=lambda a, rng: rng.randint(-3, 3),
    )


@dataclass(frozen=True)
class HahnElem:
    """Finite-support map from an ordered index set to nonzero rationals."""

    support: tuple = ()

    @classmethod
    def of(cls, mapping: dict) -> "HahnElem":
        return cls(tuple(sorted((i, Fraction(v)) for i, v in mapping.items() if v)))

    def as_dict(self) -> dict:
        return dict(self.support)

    def __str__(self):
        if not self.support:
            return "0"
        return "{" + ", ".join(f"{i}: {v}" for i, v in self.support) + "}"


def hahn_group(index) -> GroupSpec:
    """Finite-support Hahn group over ``index`` with the lexicographic order."""
    index = sorted(index)
    if not index:
        raise ValueError("index set must be nonempty")

    def op(a, b):
        d = a.as_dict()
        for i, v in b.support:
            d[i] = d.get(i, 0) + v
        return HahnElem.of(d)

    def inverse(a):
        return HahnElem(tuple((i, -v) for i, v in a.support))

    def compare(a, b):
        diff = op(a, inverse(b)).support
        if not diff:
            return EQUAL
        return GREATER if diff[-1][1] > 0 else LESS

    def sample(rng):
        k = rng.randint(0, len(index))
        return HahnElem.of({i: small_rational(rng) for i in rng.sample(index, k)})

    def rank(a):
        return a.support[-1][0]

    def scaling(a):
        top = rank(a)
        s = HahnElem.of({top: 1})
        return s, a, inverse(a)

    return GroupSpec(f"hahn({index})", op, HahnElem(), inverse, compare, sample,
                     abelian=True, rank=rank, scaling=scaling,
                     centralizer=lambda a, rng: sample(rng))


# --------------------------------------------------------------------------
# semidirect products


@dataclass(frozen=True)
class SemidirectElem:
    g: Any
    a: Any

    def __str__(self):
        return f"({self.g}, {self.a})"


@dataclass(frozen=True)
class AffElem:
    """``x -> scale . x + shift`` with ``scale > 0``."""

    scale: Any
    shift: Any

    def __str__(self):
        return f"({self.scale}, {self.shift})"


def semidirect(G: GroupSpec, A: GroupSpec, act: Callable[[Any, Any], Any], *,
               name: str | None = None, scalar: Callable[[Any], Fraction] | None = None,
               smoke_samples: int = 50, seed: int = 0, elem=SemidirectElem) -> GroupSpec:
    """Lexicographic semidirect product with ``(f, a)(g, b) = (fg, f*b + a)``.

    ``scalar`` declares the action linear (``g * b = scalar(g) . b``) which
    enables closed-form centralizers.  The action is smoke-tested for MGA1
    and MGA2 on construction.
    """
    report = check_mga(G, A, act, smoke_samples, seed, axioms=("MGA1", "MGA2"))
    bad = [r for r in report if r["failures"]]
    if bad:
        raise ActionViolation(f"{bad[0]['axiom']} fails: {bad[0]['failures'][0]}")

    first, second = ("scale", "shift") if elem is AffElem else ("g", "a")

    def mk(g, a):
        return elem(g, a)

    def parts(x):
        return getattr(x, first), getattr(x, second)

    def op(x, y):
        f, a = parts(x)
        g, b = parts(y)
        return mk(G.op(f, g), A.op(act(f, b), a))

    def inverse(x):
        f, a = parts(x)
        fi = G.inverse(f)
        return mk(fi, act(fi, A.inverse(a)))

    def compare(x, y):
        f, a = parts(x)
        g, b = parts(y)
        c = G.compare(f, g)
        return c if c != EQUAL else A.compare(a, b)

    def sample(rng):
        return mk(G.sampler(rng), A.sampler(rng))

    rank = None
    if G.rank is not None and A.rank is not None:
        def rank(x):
            f, a = parts(x)
            if not G.is_identity(f):
                return (1, G.rank(f))
            return (0, A.rank(a))

    def dominates(x, y):
        # f > C(g, b) is possible only when g = 1: then C = {1} x C(b) when scale moves
        f, a = parts(x)
        g, b = parts(y)
        if G.is_identity(g):
            return G.compare(f, G.identity) == GREATER
        return False

    def scaling(x):
        f, a = parts(x)
        if G.is_identity(f):
            s, u, ui = A.scaling(a)
            return mk(G.identity, s), mk(G.identity, u), mk(G.identity, ui)
        s, u, ui = G.scaling(f)
        return mk(s, A.identity), mk(u, A.identity), mk(ui, A.identity)

    centralizer = None
    if scalar is not None:
        def centralizer(x, rng):
            f, a = parts(x)
            if G.is_identity(f):
                return mk(G.identity, A.sampler(rng))
            h = G.sampler(rng)
            lam, mu = scalar(f), scalar(h)
            # (lam - 1) c = (mu - 1) a
            return mk(h, A_scale(A, a, (mu - 1) / (lam - 1)))

    return GroupSpec(
        name or f"{G.name} x| {A.name}", op, mk(G.identity, A.identity), inverse, compare, sample,
        archimedean_centralizers=G.archimedean_centralizers and A.archimedean_centralizers,
        rank=rank, dominates=dominates,
        scaling=scaling if (G.scaling and A.scaling) else None,
        centralizer=centralizer,
        extra={"act": act, "scalar": scalar, "G": G, "A": A},
    )


def A_scale(A: GroupSpec, a, lam: Fraction):
    """Scalar multiple in a rational vector group (plain rationals or Hahn elements)."""
    if isinstance(a, HahnElem):
        return HahnElem.of({i: v * lam for i, v in a.support})
    return a * lam


def check_mga(G: GroupSpec, A: GroupSpec, act, samples: int = 500, seed: int = 0,
              axioms=("MGA1", "MGA2", "MGA3", "MGA4"), scalar=None) -> list:
    """Randomized check of the action axioms; one JSON-ready record per axiom."""
    rng = random.Random(seed)
    out = []
    for ax in axioms:
        passes, failures, undecided, notes = 0, [], 0, ""
        for _ in range(samples):
            f, g = G.sampler(rng), G.sampler(rng)
            a, b = A.sampler(rng), A.sampler(rng)
            if ax == "MGA1":
                if A.compare(a, b) == EQUAL:
                    continue
                lo, hi = (a, b) if A.compare(a, b) == LESS else (b, a)
                ok = A.compare(act(f, lo), act(f, hi)) == LESS
                bad = f"f={G.render(f)}, a={A.render(lo)} < b={A.render(hi)}"
            elif ax == "MGA2":
                if G.compare(f, g) == EQUAL:
                    continue
                lo, hi = (f, g) if G.compare(f, g) == LESS else (g, f)
                pos = a if A.compare(a, A.identity) == GREATER else A.inverse(a)
                if A.is_identity(pos):
                    continue
                ok = A.compare(act(lo, pos), act(hi, pos)) == LESS
                bad = f"f={G.render(lo)} < g={G.render(hi)}, a={A.render(pos)}"
            elif ax == "MGA3":
                if scalar is None:
                    notes = "no closed-form solver for this action"
                    undecided += 1
                    continue
                if G.is_identity(g):
                    continue
                # g' := larger element of C(g) (Abelian acting group), solve for b'
                gp = G.op(g, G.op(g, G.sample_positive(rng)))
                lam, lam_p = scalar(g), scalar(gp)
                bp = A_scale(A, b, (lam_p - 1) / (lam - 1))
                ok = A.eq(A.op(act(g, bp), b), A.op(act(gp, b), bp))
                bad = f"g={G.render(g)}, b={A.render(b)}, g'={G.render(gp)}"
            else:
                f = G.sample_positive(rng)
                pos = b if A.compare(b, A.identity) == GREATER else A.inverse(b)
                if A.is_identity(pos):
                    continue
                rhs = A.op(A.op(a, pos), A.inverse(a))
                ok = A.compare(act(f, pos), rhs) == GREATER
                bad = f"a={A.render(a)}, f={G.render(f)}, b={A.render(pos)}"
                if A.abelian:
                    notes = "A is Abelian: implied by MGA2"
            if ok:
                passes += 1
            else:
                failures.append(bad)
        out.append({"group": f"{G.name} x| {A.name}", "axiom": ax, "samples": samples,
                    "passes": passes, "failures": failures[:5], "undecided": undecided,
                    "notes": notes})
    return out


def aff_group(G: GroupSpec | None = None) -> GroupSpec:
    """Positive affine maps ``x -> lam . x + a`` over a rational vector group ``G``."""
    G = G or rationals()
    spec = semidirect(positive_rationals(), G, lambda lam, a: A_scale(G, a, lam),
                      name=f"aff({G.name})", scalar=lambda lam: lam, elem=AffElem)
    return spec


def semidirect_demo() -> GroupSpec:
    """``Z x| Q`` with ``n * b = 2^n b``."""
    Q = rationals()
    return semidirect(integers(), Q, lambda n, b: b * Fraction(2) ** n,
                      name="Z x| Q (2^n)", scalar=lambda n: Fraction(2) ** n)


# --------------------------------------------------------------------------
# quotients


def quotient(G: GroupSpec, member: Callable[[Any], bool], n_sampler: Callable[[random.Random], Any],
             *, name: str | None = None, smoke_samples: int = 30, seed: int = 0,
             n_rank_bound=None) -> GroupSpec:
    """``G / N`` on coset representatives, with ``gN < hN`` iff ``g < h`` off ``N``.

    ``N`` is smoke-tested for normality and convexity on construction.
    """
    rng = random.Random(seed)
    for _ in range(smoke_samples):
        g, n = G.sampler(rng), n_sampler(rng)
        if not member(G.op(G.op(g, n), G.inverse(g))):
            raise NotNormal(f"{G.render(g)} conjugates {G.render(n)} out of N")
        h = G.sampler(rng)
        top = n if G.compare(n, G.identity) != LESS else G.inverse(n)
        if G.compare(G.identity, h) != GREATER and G.compare(h, top) != GREATER and not member(h):
            raise NotConvex(f"{G.render(h)} lies between 1 and {G.render(top)} but not in N")

    def compare(g, h):
        if member(G.op(G.inverse(g), h)):
            return EQUAL
        return G.compare(g, h)

    rank = None
    if G.rank is not None:
        rank = G.rank

    return GroupSpec(
        name or f"{G.name}/N", G.op, G.identity, G.inverse, compare, G.sampler,
        archimedean_centralizers=G.archimedean_centralizers, abelian=G.abelian,
        render=G.render, rank=rank, extra={"base": G, "member": member, "n_sampler": n_sampler},
    )


# --------------------------------------------------------------------------
# Puiseux germ group adapter


def _germ_compare(fuel):
    def compare(f, g):
        r = S.cmp(f, g, fuel)
        return EQUAL if isinstance(r, EqualToDepth) else r
    return compare


def puiseux_group(fuel=None) -> GroupSpec:
    fuel = S._fuel(fuel)

    def rank(f):
        return C.rank(f, fuel)

    def dominates(f, g):
        # f > C(g) when f > x and rank(f) > rank(g): centralizers stay within rank(g)
        return S.cmp(f, S.x(), fuel) == GREATER and C.rank(f, fuel) > C.rank(g, fuel)

    def scaling(f):
        r, c = C.skeleton_coord(f, fuel)
        return C.scaling_element(r), C.flow(r, c), C.flow(r, C.coord_inverse(r, c))

    def centralizer(f, rng):
        # flows at the rank of a flow commute with it; other germs only get their iterates
        r, _ = C.skeleton_coord(f, fuel)
        return C.flow(r, random_coord(rng, r))

    return GroupSpec(
        "puiseux", lambda f, g: S.compose(f, g, fuel), S.x(), lambda f: S.func_inverse(f, fuel),
        _germ_compare(fuel), lambda rng: random_germ(rng),
        render=lambda f: S.render(f, 4, fuel), rank=rank, dominates=dominates,
        scaling=scaling, centralizer=centralizer, extra={"fuel": fuel},
    )


def leading_affine(f: S.Germ, fuel=None) -> AffElem:
    """``(e, c)`` from the leading term ``c x^e``."""
    e, c = S.leading(f, fuel)
    if e <= 0 or c.sign() <= 0:
        raise NotInfinitelyIncreasing(f"{f.origin} is not > R")
    return AffElem(e, c)


def affine_product(p: AffElem, q: AffElem) -> AffElem:
    """``(e, c)(e', c') = (e e', c c'^e)``: leading data of a composition."""
    return AffElem(p.scale * q.scale, as_algebraic(p.shift) * pow_rational(q.shift, p.scale))


def puiseux_mod_affine_kernel(fuel=None) -> GroupSpec:
    """Puiseux germs modulo the germs with leading term exactly x (ranks below Hom)."""
    G = puiseux_group(fuel)
    fuel = G.extra["fuel"]

    def member(f):
        e, c = S.leading(f, fuel)
        return e == 1 and c == 1

    def n_sampler(rng):
        return random_germ(rng, kind="Level")

    return quotient(G, member, n_sampler, name="puiseux/N")


# --------------------------------------------------------------------------
# growth-order checks


def preceq_generic(G: GroupSpec, f, g, n_max: int = 6) -> str:
    """Iterate oracle for ``f <= g`` in the growth quasi-order: "yes", "no-within" or "identity"."""
    if G.is_identity(g):
        return "yes" if G.is_identity(f) else "no-within"
    big = g if G.compare(g, G.identity) == GREATER else G.inverse(g)
    small = G.inverse(big)
    up, down = big, small
    for _ in range(n_max):
        if G.compare(down, f) != GREATER and G.compare(f, up) != GREATER:
            return "yes"
        up, down = G.op(big, up), G.op(small, down)
    return "no-within"


def rank_disjoint_union_check(G: GroupSpec, N: GroupSpec, samples: int = 50, seed: int = 0,
                              n_max: int = 6) -> dict:
    """Ranks of ``G`` split as ranks of ``N`` below ranks of ``G/N``.

    ``N`` is a quotient spec as built by :func:`quotient`.  The classifier
    ``G.rank`` is compared against the iterate oracle run inside ``N`` and
    inside ``G/N``; the latter is an independent route.
    """
    rng = random.Random(seed)
    member = N.extra["member"]
    n_sampler = N.extra["n_sampler"]
    checks = agree = undecided = 0
    contradictions = []
    census = set()

    def classify(a, b, spec):
        ra, rb = G.rank(a), G.rank(b)
        ab = preceq_generic(spec, a, b, n_max)
        ba = preceq_generic(spec, b, a, n_max)
        return ra, rb, ab, ba

    def judge(ra, rb, ab, ba, label):
        nonlocal checks, agree, undecided
        checks += 1
        expect = ("yes", "no-within") if ra < rb else ("no-within", "yes") if rb < ra else ("yes", "yes")
        if (ab, ba) == expect:
            agree += 1
            return
        # a "yes" against the classifier's strict order is a contradiction
        if (ra < rb and ba == "yes") or (rb < ra and ab == "yes"):
            contradictions.append(label)
        else:
            undecided += 1

    for _ in range(samples):
        n1, n2 = n_sampler(rng), n_sampler(rng)
        if not (G.is_identity(n1) or G.is_identity(n2)):
            ra, rb, ab, ba = classify(n1, n2, G)
            census.update([("N", str(ra)), ("N", str(rb))])
            judge(ra, rb, ab, ba, f"N: {G.render(n1)} vs {G.render(n2)}")
        f, g = G.sampler(rng), G.sampler(rng)
        if member(f) or member(g):
            continue
        ra, rb, ab, ba = classify(f, g, N)
        census.update([("G/N", str(ra)), ("G/N", str(rb))])
        judge(ra, rb, ab, ba, f"G/N: {G.render(f)} vs {G.render(g)}")
        if not G.is_identity(n1):
            checks += 1
            if G.rank(n1) < ra:
                agree += 1
            else:
                contradictions.append(f"N-rank of {G.render(n1)} not below {G.render(f)}")
    return {"group": G.name, "check": "rank_disjoint_union", "samples": samples, "checks": checks,
            "agree": agree, "undecided": undecided, "contradictions": contradictions[:5],
            "rank_census": sorted(f"{side}:{r}" for side, r in census)}


def check_ordered_group(G: GroupSpec, samples: int = 100, seed: int = 0) -> dict:
    """Associativity, inverses and two-sided translation invariance of the order."""
    rng = random.Random(seed)
    failures = []
    passes = 0
    for _ in range(samples):
        f, g, h = G.sampler(rng), G.sampler(rng), G.sampler(rng)
        problems = []
        if not G.eq(G.op(G.op(f, g), h), G.op(f, G.op(g, h))):
            problems.append("associativity")
        if not G.is_identity(G.op(f, G.inverse(f))):
            problems.append("inverse")
        c = G.compare(g, h)
        if c != EQUAL:
            if G.compare(G.op(f, g), G.op(f, h)) != c or G.compare(G.op(g, f), G.op(h, f)) != c:
                problems.append("translation invariance")
        if not G.is_identity(f) and (G.is_identity(G.power(f, 2)) or G.is_identity(G.power(f, 3))):
            problems.append("torsion")
        if problems:
            failures.append(f"{'/'.join(problems)}: f={G.render(f)}, g={G.render(g)}, h={G.render(h)}")
        else:
            passes += 1
    return {"group": G.name, "axiom": "ordered-group", "samples": samples, "passes": passes,
            "failures": failures[:5], "undecided": 0}


def _gog_sample(G: GroupSpec, rng: random.Random, n_max: int) -> dict:
    """Outcome per axiom for one sample: 'pass', 'fail:<text>', 'undecided' or None (vacuous)."""
    out = {}
    # GOG1: f >= g > 1 and g0 in <g>; some f^[n] >= g0 with n <= n_max
    f, g = G.sample_positive(rng), G.sample_positive(rng)
    if G.compare(f, g) == LESS:
        f, g = g, f
    k = rng.randint(1, 3)
    g0 = G.power(g, k)
    cur = f
    res = "undecided"
    for _ in range(n_max):
        if G.compare(cur, g0) != LESS:
            res = "pass"
            break
        cur = G.op(f, cur)
    out["GOG1"] = res

    # GOG2: f > C(g), g > 1 implies fg > gf
    if G.abelian:
        out["GOG2"] = None
    else:
        a, b = G.sample_positive(rng), G.sample_positive(rng)
        if G.compare(a, b) == LESS:
            a, b = b, a
        if G.dominates is not None:
            certified = G.dominates(a, b)
        else:
            certified = G.compare(a, G.power(b, n_max)) == GREATER
        if not certified:
            out["GOG2"] = None
        else:
            ok = G.compare(G.op(a, b), G.op(b, a)) == GREATER
            if ok:
                out["GOG2"] = "pass"
            elif G.dominates is None:
                out["GOG2"] = "undecided"
            else:
                out["GOG2"] = f"fail:f={G.render(a)}, g={G.render(b)}"

    # GOG3: scaling element s at the rank of h, with some u in C(s), u ~ h
    h = G.sampler(rng)
    if G.is_identity(h):
        out["GOG3"] = None
    elif G.abelian:
        out["GOG3"] = "pass"
    elif G.scaling is None or G.rank is None:
        out["GOG3"] = "undecided"
    else:
        s, u, ui = G.scaling(h)
        if not G.commutes(s, u):
            out["GOG3"] = f"fail:scaling element does not commute with witness for {G.render(h)}"
        elif G.rank(s) != G.rank(h):
            out["GOG3"] = f"fail:scaling element rank differs for {G.render(h)}"
        else:
            r = G.op(h, ui)
            ok = G.is_identity(r) or G.rank(r) < G.rank(h)
            out["GOG3"] = "pass" if ok else f"fail:witness not similar to {G.render(h)}"

    # CT: elements sampled from a centralizer commute with each other
    if G.centralizer is None:
        out["CT"] = None if G.abelian else "undecided"
    else:
        base = G.sampler(rng)
        if G.is_identity(base):
            out["CT"] = None
        else:
            if G.scaling is not None and not G.abelian:
                base = G.scaling(base)[1]
            c1, c2 = G.centralizer(base, rng), G.centralizer(base, rng)
            ok = G.commutes(c1, c2) and G.commutes(c1, base)
            out["CT"] = "pass" if ok else f"fail:{G.render(c1)} and {G.render(c2)} in C({G.render(base)})"
    return out


def gog_axiom_suite(G: GroupSpec, samples: int = 500, seed: int = 0, n_max: int = 6,
                    workers: int = 4) -> list:
    """GOG1-3 and CT by bounded randomized search; one JSON-ready record per axiom.

    Worker ``w`` draws from ``Random(seed + w)`` so the report only depends
    on ``(samples, seed, workers)``.
    """
    workers = max(1, min(workers, samples))
    counts = [samples // workers + (1 if w < samples % workers else 0) for w in range(workers)]

    def run(w):
        rng = random.Random(seed + w)
        rows = []
        for _ in range(counts[w]):
            try:
                rows.append(_gog_sample(G, rng, n_max))
            except GogError as exc:
                rows.append({"error": f"{exc.code}: {exc}"})
        return rows

    if workers == 1:
        chunks = [run(0)]
    else:
        with ThreadPoolExecutor(workers) as pool:
            chunks = list(pool.map(run, range(workers)))
    axioms = ("GOG1", "GOG2", "GOG3", "CT")
    report = []
    for ax in axioms:
        rec = {"group": G.name, "axiom": ax, "samples": samples, "passes": 0,
               "failures": [], "undecided": 0, "vacuous": 0}
        for rows in chunks:
            for row in rows:
                if "error" in row:
                    rec["undecided"] += 1
                    continue
                v = row[ax]
                if v is None:
                    rec["vacuous"] += 1
                elif v == "pass":
                    rec["passes"] += 1
                elif v == "undecided":
                    rec["undecided"] += 1
                else:
                    rec["failures"].append(v[5:])
        rec["failures"] = rec["failures"][:5]
        report.append(rec)
    return report
