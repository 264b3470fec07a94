"""Growth-order-group layer on Puiseux germs.

The product is composition: ``group_op(f, g) = f @ g``.  Growth ranks of the
Puiseux germ group form the chain ``Level(q) (q < 1) < Hom < Top``; a germ
``c x^e + ...`` is Top when ``e != 1``, Hom when ``e = 1`` and ``c != 1``, and
``Level(q)`` when it reads ``x + d x^q + ...``.

Inside each rank the centralizer of the scaling element is a one-parameter
family of closed-form *flows*; the coordinate of a germ is the parameter of
the flow it is order-equivalent to.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from functools import total_ordering

from . import series as S
from .coeff import AlgebraicReal, Ordering, as_algebraic
from .errors import (
    FuelExhausted,
    IdentityHasNoRank,
    InvalidCoordinate,
    NotCommuting,
    NotInfinitelyIncreasing,
    RankNotDecreasing,
)
from .series import EqualToDepth, Germ

__all__ = [
    "Rank", "SkeletonCoord", "ExpansionStep", "Similarity", "Preceq",
    "TOP", "HOM", "level",
    "group_op", "group_inv", "group_id", "commutator", "iterate",
    "rank", "rank_cmp", "preceq_oracle",
    "scaling_element", "flow", "coord_op", "coord_inverse",
    "skeleton_coord", "order_eq", "asym_expand", "reconstruct", "gog1_witness",
    "render_expansion", "expansion_json",
]


@total_ordering
@dataclass(frozen=True)
class Rank:
    """One of ``Top``, ``Hom`` or ``Level(q)`` with ``q < 1``."""

    kind: str
    q: Fraction | None = None

    def __post_init__(self):
        if self.kind not in ("Top", "Hom", "Level"):
            raise ValueError(f"unknown rank kind {self.kind!r}")
        if self.kind == "Level":
            q = Fraction(self.q)
            if q >= 1:
                raise ValueError(f"Level exponent must be < 1, got {q}")
            object.__setattr__(self, "q", q)
        elif self.q is not None:
            raise ValueError(f"{self.kind} takes no exponent")

    def _key(self):
        if self.kind == "Level":
            return (0, self.q)
        return (1 if self.kind == "Hom" else 2, Fraction(0))

    def __lt__(self, other):
        if not isinstance(other, Rank):
            return NotImplemented
        return self._key() < other._key()

    @property
    def additive(self) -> bool:
        return self.kind == "Level"

    def __str__(self):
        return f"Level({self.q})" if self.kind == "Level" else self.kind

    @classmethod
    def parse(cls, text: str) -> "Rank":
        text = text.strip()
        if text in ("Top", "Hom"):
            return cls(text)
        if text.startswith("Level(") and text.endswith(")"):
            return cls("Level", Fraction(text[6:-1]))
        raise ValueError(f"not a rank: {text!r}")


TOP = Rank("Top")
HOM = Rank("Hom")


def level(q) -> Rank:
    return Rank("Level", Fraction(q))


@dataclass(frozen=True)
class SkeletonCoord:
    """Coordinate of a flow inside one rank.

    Top carries a positive rational exponent ``e != 1``, Hom a positive
    coefficient ``c != 1`` (both multiplicative), Level a displacement
    ``d != 0`` (additive).
    """

    rank: Rank
    value: object

    def __post_init__(self):
        r, v = self.rank, self.value
        if r.kind == "Top":
            if not isinstance(v, (int, Fraction)) and not (isinstance(v, AlgebraicReal) and v.is_rational):
                raise InvalidCoordinate(f"Top coordinate must be rational, got {v}")
            v = Fraction(v.as_fraction() if isinstance(v, AlgebraicReal) else v)
            if v <= 0 or v == 1:
                raise InvalidCoordinate(f"Top coordinate must be positive and != 1, got {v}")
        else:
            try:
                v = as_algebraic(v)
            except TypeError:
                raise InvalidCoordinate(f"bad coordinate {v!r}") from None
            if r.kind == "Hom" and (v.sign() <= 0 or v == 1):
                raise InvalidCoordinate(f"Hom coordinate must be positive and != 1, got {v}")
            if r.kind == "Level" and not v:
                raise InvalidCoordinate("Level coordinate must be nonzero")
        object.__setattr__(self, "value", v)

    def __str__(self):
        return _num_str(self.value)


@dataclass(frozen=True)
class ExpansionStep:
    rank: Rank
    coord: SkeletonCoord

    def __str__(self):
        return f"({self.rank}, {self.coord})"


class Similarity(enum.Enum):
    SIMILAR = "Similar"
    NOT_SIMILAR = "NotSimilar"
    UNDECIDED = "Undecided"


@dataclass(frozen=True)
class Preceq:
    """Outcome of the iterate oracle: ``Yes`` with witness ``n``, ``NoWithin``, or ``Undecided``."""

    verdict: str
    n: int

    def __str__(self):
        return f"{self.verdict}({self.n})" if self.verdict != "Undecided" else "Undecided"


def _num_str(v) -> str:
    if isinstance(v, AlgebraicReal):
        return S._coeff_str(v).strip("()") if v.radical_form() is not None else str(v)
    return str(v)


# --------------------------------------------------------------------------
# group structure


def group_op(f: Germ, g: Germ, fuel=None) -> Germ:
    return S.compose(f, g, fuel)


def group_inv(f: Germ, fuel=None) -> Germ:
    return S.func_inverse(f, fuel)


def group_id() -> Germ:
    return S.x()


def commutator(f: Germ, g: Germ, fuel=None) -> Germ:
    """``f^-1 g^-1 f g`` with composition as the product."""
    fi, gi = group_inv(f, fuel), group_inv(g, fuel)
    return group_op(fi, group_op(gi, group_op(f, g, fuel), fuel), fuel)


def iterate(f: Germ, n: int, fuel=None) -> Germ:
    """``f^[n]`` for any integer ``n``; negative powers iterate the inverse."""
    if n == 0:
        return group_id()
    base = f if n > 0 else group_inv(f, fuel)
    out = base
    for _ in range(abs(n) - 1):
        out = group_op(base, out, fuel)
    return out


def _is_identity(f: Germ, fuel) -> bool:
    return isinstance(S.cmp(f, S.x(), fuel), EqualToDepth)


# --------------------------------------------------------------------------
# ranks


def rank(f: Germ, fuel=None) -> Rank:
    fuel = S._fuel(fuel)
    e, c = S.leading(f, fuel)
    if e <= 0 or c.sign() <= 0:
        raise NotInfinitelyIncreasing(f"{f.origin} is not > R")
    if e != 1:
        return TOP
    if c != 1:
        return HOM
    d = S.sub(f, S.x())
    for i in range(fuel.max_terms):
        st = d.step(i)
        if st is None:
            break
        if st[1]:
            return level(st[0])
    raise IdentityHasNoRank(f"{f.origin} equals x to depth {fuel.max_terms}")


def rank_cmp(f: Germ, g: Germ, fuel=None) -> Ordering:
    a, b = rank(f, fuel), rank(g, fuel)
    return Ordering.of((a > b) - (a < b))


def _leq(a: Germ, b: Germ, fuel) -> bool:
    # EqualToDepth is read as equality, hence as <=
    return S.cmp(a, b, fuel) != Ordering.GREATER


def preceq_oracle(f: Germ, g: Germ, n_max: int = 6, fuel=None) -> Preceq:
    """Search ``n <= n_max`` with ``g^[-n] <= f <= g^[n]`` (``g`` replaced by its inverse when below x)."""
    fuel = S._fuel(fuel)
    try:
        s = S.cmp(g, S.x(), fuel)
        if isinstance(s, EqualToDepth):
            raise IdentityHasNoRank(f"{g.origin} equals x to depth {fuel.max_terms}")
        big = g if s == Ordering.GREATER else group_inv(g, fuel)
        small = group_inv(big, fuel)
        up, down = big, small
        for n in range(1, n_max + 1):
            if _leq(down, f, fuel) and _leq(f, up, fuel):
                return Preceq("Yes", n)
            up = group_op(big, up, fuel)
            down = group_op(small, down, fuel)
        return Preceq("NoWithin", n_max)
    except FuelExhausted:
        return Preceq("Undecided", n_max)


# --------------------------------------------------------------------------
# flows and coordinates


def scaling_element(r: Rank) -> Germ:
    if r.kind == "Top":
        return S.monomial(1, 2)
    if r.kind == "Hom":
        return S.monomial(2, 1)
    return flow(r, SkeletonCoord(r, 1 / (1 - r.q)))


def _coord(r: Rank, t) -> SkeletonCoord:
    if isinstance(t, SkeletonCoord):
        if t.rank != r:
            raise InvalidCoordinate(f"coordinate for {t.rank} used at {r}")
        return t
    return SkeletonCoord(r, t)


def flow(r: Rank, t) -> Germ:
    """Closed-form element of the centralizer of the scaling element at rank ``r``."""
    t = _coord(r, t)
    v = t.value
    if r.kind == "Top":
        return S.monomial(1, v)
    if r.kind == "Hom":
        return S.monomial(v, 1)
    q = r.q
    p = 1 - q
    g = S.shifted_power(p, v * p)
    g.origin = f"flow({q}; {_num_str(v)})"
    return g


def coord_op(r: Rank, t1, t2):
    """Coordinate of ``flow(r, t1) @ flow(r, t2)``; None when it is the identity."""
    a, b = _coord(r, t1).value, _coord(r, t2).value
    v = a + b if r.additive else a * b
    if (r.additive and not v) or (not r.additive and v == 1):
        return None
    return SkeletonCoord(r, v)


def coord_inverse(r: Rank, t) -> SkeletonCoord:
    v = _coord(r, t).value
    if r.kind == "Level":
        return SkeletonCoord(r, -v)
    if r.kind == "Top":
        return SkeletonCoord(r, 1 / v)
    return SkeletonCoord(r, v.recip())


def skeleton_coord(f: Germ, fuel=None):
    r = rank(f, fuel)
    if r.kind == "Top":
        return r, SkeletonCoord(r, S.lexp(f, fuel))
    if r.kind == "Hom":
        return r, SkeletonCoord(r, S.leading(f, fuel).coefficient)
    return r, SkeletonCoord(r, S.coeff_at(S.sub(f, S.x()), r.q, fuel))


def order_eq(f: Germ, g: Germ, fuel=None) -> Similarity:
    """``f ~ g`` iff ``f g^-1`` is the identity or has smaller rank than ``f``."""
    fuel = S._fuel(fuel)
    try:
        r = group_op(f, group_inv(g, fuel), fuel)
        if _is_identity(r, fuel):
            return Similarity.SIMILAR
        return Similarity.SIMILAR if rank(r, fuel) < rank(f, fuel) else Similarity.NOT_SIMILAR
    except (FuelExhausted, IdentityHasNoRank):
        return Similarity.UNDECIDED


# --------------------------------------------------------------------------
# expansions


def asym_expand(f: Germ, depth: int, fuel=None) -> list:
    """Greedy expansion ``f ~ flow_0 @ flow_1 @ ...`` with strictly decreasing ranks."""
    fuel = S._fuel(fuel)
    steps: list = []
    cur = f
    for _ in range(depth):
        if _is_identity(cur, fuel):
            break
        r, c = skeleton_coord(cur, fuel)
        if steps and not r < steps[-1].rank:
            raise RankNotDecreasing(f"rank {r} after {steps[-1].rank}")
        steps.append(ExpansionStep(r, c))
        cur = group_op(flow(r, coord_inverse(r, c)), cur, fuel)
    return steps


def expansion_remainder(f: Germ, steps, fuel=None) -> Germ:
    """``reconstruct(steps)^-1 @ f``, built from the closed-form inverse flows."""
    cur = f
    for st in steps:
        cur = group_op(flow(st.rank, coord_inverse(st.rank, st.coord)), cur, fuel)
    return cur


def reconstruct(steps) -> Germ:
    out = None
    for st in steps:
        if out is not None and not st.rank < prev:
            raise RankNotDecreasing(f"rank {st.rank} after {prev}")
        prev = st.rank
        fl = flow(st.rank, st.coord)
        out = fl if out is None else group_op(out, fl)
    return group_id() if out is None else out


def render_expansion(steps) -> str:
    parts = []
    for st in steps:
        v = st.coord.value
        if st.rank.kind == "Top":
            parts.append(S._exp_str(v))
        elif st.rank.kind == "Hom":
            parts.append(f"({_num_str(v)}·x)")
        else:
            parts.append(f"flow({st.rank.q}; {_num_str(v)})")
    return " ∘ ".join(parts) if parts else "x"


def expansion_json(steps) -> list:
    return [{"rank": str(st.rank), "coord": _num_str(st.coord.value)} for st in steps]


def gog1_witness(f: Germ, g: Germ, g0: Germ, fuel=None) -> Germ:
    """Least iterate ``f^[n]`` (``n <= fuel``) with ``f^[n] >= g0``."""
    fuel = S._fuel(fuel)
    if not _is_identity(commutator(g0, g, fuel), fuel):
        raise NotCommuting(f"{g0.origin} does not commute with {g.origin}")
    cur = f
    for n in range(1, fuel.max_terms + 1):
        if S.cmp(cur, g0, fuel) != Ordering.LESS:
            return cur
        cur = group_op(f, cur, fuel)
    raise FuelExhausted(f"no iterate of {f.origin} reaches {g0.origin} within {fuel.max_terms}")
