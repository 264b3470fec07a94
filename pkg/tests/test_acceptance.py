"""Acceptance criteria, one test per criterion, each with its own time budget."""
import random
import time
from fractions import Fraction

import pytest

from gog import series as S
from gog.coeff import Ordering, root
from gog.combinators import (
    affine_product,
    aff_group,
    gog_axiom_suite,
    hahn_group,
    leading_affine,
    puiseux_group,
    puiseux_mod_affine_kernel,
    rank_disjoint_union_check,
    semidirect_demo,
)
from gog.gogcore import (
    HOM,
    TOP,
    _is_identity,
    asym_expand,
    coord_op,
    expansion_remainder,
    flow,
    level,
    preceq_oracle,
    rank,
    rank_cmp,
    reconstruct,
)
from gog.hfield import (
    chain_rule_check,
    conjugate_to_translation,
    gap_margin,
    hf_axiom_check,
    in_o,
    logderiv,
    taylor_check,
)
from gog.errors import PreconditionViolated
from gog.sampling import random_coord, random_germ, small_rational

FUEL = S.Fuel(32)


def zero_to(f, n):
    """First ``n`` raw steps of ``f`` vanish (or the stream ends)."""
    for i in range(n):
        st = f.step(i)
        if st is None:
            return True
        if st[1]:
            return False
    return True


def small_germ(rng, max_terms=4, lo=-8, hi=8):
    """Finite germ on the 1/4 grid, not necessarily > R."""
    k = rng.randint(1, max_terms)
    exps = rng.sample(range(lo, hi + 1), k)
    return S.from_terms([(Fraction(e, 4), small_rational(rng)) for e in exps])


def infinitesimal(rng, max_terms=3):
    return small_germ(rng, max_terms, lo=-8, hi=-1)


def test_c1_golden_rank_structure(criterion):
    with criterion(1, "golden rank structure") as notes:
        rng = random.Random(1)
        t0 = time.perf_counter()
        assert rank(S.monomial(1, 2)) == TOP
        for c in (Fraction(2), Fraction(1, 2), Fraction(3, 2), root(2, 2)):
            assert rank(S.monomial(c, 1)) == HOM
        germs = [(S.monomial(1, 2), (2,)), (S.monomial(3, 1), (1,))]
        for _ in range(20):
            q = Fraction(rng.randint(-40, 11), rng.randint(1, 12))
            if q >= 1:
                q = Fraction(1, 2)
            d = small_rational(rng)
            f = S.add(S.x(), S.monomial(d, q))
            assert rank(f) == level(q)
            germs.append((f, (0, q)))
        for f, kf in germs:
            for g, kg in germs:
                expect = Ordering.of((kf > kg) - (kf < kg))
                assert rank_cmp(f, g) == expect
        elapsed = time.perf_counter() - t0
        notes.append(f"{elapsed:.2f}s of 1s")
        assert elapsed < 1


def test_c2_group_laws(criterion):
    with criterion(2, "group laws") as notes:
        rng = random.Random(2)
        t0 = time.perf_counter()
        for _ in range(100):
            f = random_germ(rng)
            assert zero_to(S.sub(S.compose(f, S.func_inverse(f)), S.x()), 10), f.origin
        for _ in range(50):
            a, b, c = random_germ(rng), random_germ(rng), random_germ(rng)
            lhs = S.compose(a, S.compose(b, c))
            rhs = S.compose(S.compose(a, b), c)
            assert zero_to(S.sub(lhs, rhs), 10)
        elapsed = time.perf_counter() - t0
        notes.append(f"{elapsed:.1f}s of 30s")
        assert elapsed < 30


def test_c3_gog2_flagship(criterion):
    with criterion(3, "GOG2 flagship") as notes:
        rng = random.Random(3)
        t0 = time.perf_counter()
        x2, x2b = S.monomial(1, 2), S.monomial(2, 1)
        assert S.cmp(S.compose(x2, x2b), S.compose(x2b, x2)) == Ordering.GREATER
        done = 0
        while done < 100:
            f = random_germ(rng, above_x=True)
            g = random_germ(rng, above_x=True)
            if not rank(f) > rank(g):
                continue
            assert S.cmp(S.compose(f, g), S.compose(g, f), FUEL) == Ordering.GREATER, (f.origin, g.origin)
            done += 1
        elapsed = time.perf_counter() - t0
        notes.append(f"{elapsed:.1f}s of 30s")
        assert elapsed < 30


def test_c4_gog_suites(criterion):
    with criterion(4, "GOG suites on four groups") as notes:
        t0 = time.perf_counter()
        groups = [puiseux_group(32), aff_group(), hahn_group([0, 1, 2]), semidirect_demo()]
        for G in groups:
            for rec in gog_axiom_suite(G, samples=500, seed=4):
                assert rec["failures"] == [], (G.name, rec["axiom"], rec["failures"][:3])
                assert rec["undecided"] <= 0.05 * rec["samples"], (G.name, rec)
        elapsed = time.perf_counter() - t0
        notes.append(f"{elapsed:.1f}s of 120s")
        assert elapsed < 120


def test_c5_classifier_oracle_agreement(criterion):
    with criterion(5, "classifier/oracle agreement") as notes:
        rng = random.Random(5)
        t0 = time.perf_counter()
        agree = undecided = 0
        contradictions = []
        for _ in range(200):
            f, g = random_germ(rng), random_germ(rng)
            c = rank_cmp(f, g, FUEL)
            fg = preceq_oracle(f, g, 6, FUEL).verdict == "Yes"
            gf = preceq_oracle(g, f, 6, FUEL).verdict == "Yes"
            expect = {Ordering.LESS: (True, False), Ordering.EQUAL: (True, True),
                      Ordering.GREATER: (False, True)}[c]
            if (fg, gf) == expect:
                agree += 1
            elif (fg and not expect[0]) or (gf and not expect[1]):
                contradictions.append((f.origin, g.origin))
            else:
                undecided += 1
        elapsed = time.perf_counter() - t0
        notes.append(f"agree {agree}/200, undecided {undecided}, {elapsed:.1f}s")
        assert contradictions == []
        assert agree >= 190
        assert elapsed < 120


def _expansion_samples():
    rng = random.Random(6)
    return [random_germ(rng) for _ in range(50)]


def test_c6_expansion_round_trip(criterion):
    with criterion(6, "expansion round-trip, defect recon^-1 @ f") as notes:
        t0 = time.perf_counter()
        for f in _expansion_samples():
            steps = asym_expand(f, 4, FUEL)
            recon = reconstruct(steps)
            # recon and the closed-form remainder must agree with each other
            rem = expansion_remainder(f, steps, FUEL)
            assert zero_to(S.sub(S.compose(recon, rem, FUEL), f), 10)
            defect = S.compose(S.func_inverse(recon, FUEL), f, FUEL)
            assert zero_to(S.sub(defect, rem), 10)
            assert _is_identity(defect, FUEL) or rank(defect, FUEL) < steps[-1].rank, f.origin
        elapsed = time.perf_counter() - t0
        notes.append(f"{elapsed:.1f}s of 60s")
        assert elapsed < 60


@pytest.mark.xfail(strict=True, reason="f @ recon^-1 is a conjugate of the remainder; "
                   "for 4x^2 + x at depth 3 it is x - 1/16, rank Level(0) = last rank")
def test_c6_literal_defect_order():
    for f in _expansion_samples() + [S.from_terms([(2, 4), (1, 1)])]:
        steps = asym_expand(f, 4, FUEL)
        defect = S.compose(f, S.func_inverse(reconstruct(steps), FUEL), FUEL)
        assert _is_identity(defect, FUEL) or rank(defect, FUEL) < steps[-1].rank, f.origin


def test_c7_hfield_checks(criterion):
    with criterion(7, "H-field checks") as notes:
        rng = random.Random(7)
        t0 = time.perf_counter()
        for _ in range(100):
            rep = chain_rule_check(small_germ(rng), random_germ(rng), depth=10)
            assert rep.passed and rep.margin_exponent == "inf", rep
        taylor = 0
        while taylor < 100:
            a, b, delta = small_germ(rng), random_germ(rng), small_germ(rng, 3, hi=3)
            n = rng.randint(1, 3)
            if S.lexp(a) == 0 and S.sub(a, S.constant(S.coeff_at(a, 0))).is_exact_zero():
                continue
            try:
                rep = taylor_check(a, b, delta, n, depth=10, fuel=FUEL)
            except PreconditionViolated:
                continue
            assert rep.passed, rep
            assert rep.margin_exponent == "inf" or Fraction(rep.margin_exponent) > 0
            taylor += 1
        for _ in range(100):
            a, b = infinitesimal(rng), infinitesimal(rng)
            m = gap_margin(a, b, FUEL)
            assert m is None or m > 0, (a.origin, b.origin, m)
        samples = [S.add(S.constant(small_rational(rng, nonzero=False)), infinitesimal(rng)) for _ in range(50)]
        samples += [random_germ(rng) for _ in range(50)]
        reports = hf_axiom_check(samples, FUEL)
        assert len(reports) == 100
        for rep in reports:
            assert rep.passed, rep
            assert rep.margin_exponent == "inf" or Fraction(rep.margin_exponent) > 0, rep
        elapsed = time.perf_counter() - t0
        notes.append(f"{elapsed:.1f}s of 60s")
        assert elapsed < 60


def test_c8_constructive_conjugation(criterion):
    with criterion(8, "constructive conjugation") as notes:
        t0 = time.perf_counter()
        X = S.x()
        one = S.constant(1)
        gs = [
            S.from_terms([(1, 1), (-2, 1)]),
            S.from_terms([(1, 1), (Fraction(1, 2), 1)]),
            S.from_terms([(1, 1), (0, 1), (-1, 1)]),
        ]
        for g in gs:
            h, eps = conjugate_to_translation(g, depth=6, fuel=FUEL)
            lead = S.leading(eps, FUEL)
            assert lead.coefficient.sign() > 0 and lead.exponent < 0
            assert in_o(eps, one, FUEL)
            # independent route: h @ g = (x + 1 + eps) @ h
            lhs = S.compose(h, g, FUEL)
            rhs = S.compose(S.add(S.add(X, one), eps), h, FUEL)
            assert zero_to(S.sub(lhs, rhs), 12)
        elapsed = time.perf_counter() - t0
        notes.append(f"{elapsed:.1f}s of 10s")
        assert elapsed < 10


def test_c9_quotient_rank_decomposition(criterion):
    with criterion(9, "quotient/rank decomposition") as notes:
        t0 = time.perf_counter()
        rep = rank_disjoint_union_check(puiseux_group(32), puiseux_mod_affine_kernel(32), samples=50, seed=9)
        assert rep["contradictions"] == []
        assert rep["undecided"] <= 0.05 * rep["checks"]
        assert any(r.startswith("N:") for r in rep["rank_census"])
        assert any(r.startswith("G/N:") for r in rep["rank_census"])
        rng = random.Random(9)
        for _ in range(100):
            f, g = random_germ(rng), random_germ(rng)
            assert leading_affine(S.compose(f, g)) == affine_product(leading_affine(f), leading_affine(g))
        elapsed = time.perf_counter() - t0
        notes.append(f"{rep['agree']}/{rep['checks']} rank checks agree, {rep['undecided']} undecided, {elapsed:.1f}s")
        assert elapsed < 60


def test_c10_flow_algebra(criterion):
    with criterion(10, "skeleton/flow algebra") as notes:
        rng = random.Random(10)
        t0 = time.perf_counter()
        for r in (TOP, HOM, level(Fraction(1, 2)), level(-1)):
            for _ in range(50):
                a, b = random_coord(rng, r), random_coord(rng, r)
                lhs = S.compose(flow(r, a), flow(r, b))
                c = coord_op(r, a, b)
                rhs = S.x() if c is None else flow(r, c)
                if r.kind == "Level":
                    # closed forms (x^p + t)^(1/p) compose by adding t
                    assert lhs.shape == rhs.shape
                else:
                    assert S.sub(lhs, rhs).is_exact_zero() and lhs.known_finite()
                assert zero_to(S.sub(lhs, rhs), 10)
        elapsed = time.perf_counter() - t0
        notes.append(f"{elapsed:.1f}s of 30s")
        assert elapsed < 30
