"""Seeded random samplers for germs, ranks and coordinates."""
from __future__ import annotations

import random
from fractions import Fraction

from . import series as S
from .gogcore import HOM, TOP, Rank, SkeletonCoord, level

GRID = 4
EXP_MIN, EXP_MAX = -2, 2


def small_rational(rng: random.Random, positive: bool = False, nonzero: bool = True) -> Fraction:
    while True:
        v = Fraction(rng.randint(1, 5), rng.randint(1, 3))
        if not positive and rng.random() < 0.5:
            v = -v
        if v or not nonzero:
            return v


def _grid_below(rng: random.Random, top: Fraction, k: int) -> list:
    pts = [Fraction(n, GRID) for n in range(EXP_MIN * GRID, EXP_MAX * GRID + 1) if Fraction(n, GRID) < top]
    return sorted(rng.sample(pts, min(k, len(pts))), reverse=True)


def random_germ(rng: random.Random, kind: str | None = None, above_x: bool = False,
                max_terms: int = 4) -> S.Germ:
    """Finite germ ``> R`` with at most ``max_terms`` terms on the 1/4 grid in [-2, 2].

    ``kind`` picks the rank family (``"Top"``, ``"Hom"``, ``"Level"``);
    ``above_x`` forces the germ to exceed x.
    """
    kind = kind or rng.choice(("Top", "Hom", "Level"))
    if kind == "Top":
        exps = [Fraction(n, GRID) for n in range(1, EXP_MAX * GRID + 1) if n != GRID]
        if above_x:
            exps = [e for e in exps if e > 1]
        e = rng.choice(exps)
        head = [(e, small_rational(rng, positive=True))]
    elif kind == "Hom":
        while True:
            c = small_rational(rng, positive=True)
            if c != 1 and (c > 1 or not above_x):
                break
        e = Fraction(1)
        head = [(e, c)]
    else:
        q = Fraction(rng.randint(EXP_MIN * GRID, GRID - 1), GRID)
        d = small_rational(rng, positive=above_x)
        e = q
        head = [(1, 1), (q, d)]
    extra = rng.randint(0, max_terms - len(head))
    tail = [(t, small_rational(rng)) for t in _grid_below(rng, e, extra)]
    return S.from_terms(head + tail)


def random_rank(rng: random.Random) -> Rank:
    k = rng.random()
    if k < 0.2:
        return TOP
    if k < 0.4:
        return HOM
    return level(Fraction(rng.randint(EXP_MIN * GRID, GRID - 1), GRID))


def random_coord(rng: random.Random, r: Rank) -> SkeletonCoord:
    if r.kind == "Level":
        return SkeletonCoord(r, small_rational(rng))
    while True:
        v = small_rational(rng, positive=True)
        if v != 1:
            return SkeletonCoord(r, v)
