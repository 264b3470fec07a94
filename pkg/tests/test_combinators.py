import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from gog import series as S
from gog.coeff import Ordering, as_algebraic
from gog.combinators import (
    AffElem,
    HahnElem,
    aff_group,
    affine_product,
    check_mga,
    check_ordered_group,
    gog_axiom_suite,
    hahn_group,
    integers,
    leading_affine,
    positive_rationals,
    puiseux_group,
    puiseux_mod_affine_kernel,
    quotient,
    rank_disjoint_union_check,
    rationals,
    semidirect,
    semidirect_demo,
)
from gog.errors import ActionViolation, NotConvex, NotNormal
from gog.gogcore import level

F = Fraction
H = HahnElem.of


def test_hahn_examples():
    G = hahn_group([0])
    assert G.op(H({0: 3}), H({0: 4})) == H({0: 7})
    G2 = hahn_group([0, 1])
    assert G2.compare(H({1: 1}), H({0: 1000})) == Ordering.GREATER
    assert G2.inverse(H({0: 2, 1: -3})) == H({0: -2, 1: 3})


def test_aff_examples():
    A = aff_group()
    # composition-order law: (2, 0)(1, 3) = (2, 2*3 + 0)
    assert A.op(AffElem(F(2), F(0)), AffElem(F(1), F(3))) == AffElem(F(2), F(6))
    assert A.compare(AffElem(F(1), F(5)), AffElem(F(2), F(0))) == Ordering.LESS
    assert A.compare(AffElem(F(1), F(1)), A.identity) == Ordering.GREATER
    assert A.compare(AffElem(F(3, 2), F(-100)), AffElem(F(1), F(1))) == Ordering.GREATER
    f = AffElem(F(3), F(5))
    assert A.is_identity(A.op(f, A.inverse(f)))
    assert A.inverse(f) == AffElem(F(1, 3), F(-5, 3))


def test_aff_law_is_composition_of_affine_maps():
    A = aff_group()
    rng = random.Random(0)
    for _ in range(50):
        p, q = A.sampler(rng), A.sampler(rng)
        r = A.op(p, q)
        for t in (F(0), F(1), F(-7, 3)):
            assert r.scale * t + r.shift == p.scale * (q.scale * t + q.shift) + p.shift


def test_displayed_law_with_swapped_roles_is_not_associative():
    # (f, a)(g, b) = (fg, f*a + b) fails associativity, so it cannot be the group law
    def op(x, y):
        return (x[0] * y[0], x[0] * x[1] + y[1])
    a, b, c = (F(2), F(1)), (F(3), F(0)), (F(1), F(0))
    assert op(op(a, b), c) != op(a, op(b, c))


def test_aff_centralizer_of_translation():
    A = aff_group()
    t = AffElem(F(1), F(3))
    rng = random.Random(1)
    for _ in range(30):
        g = A.sampler(rng)
        commutes = A.commutes(g, t)
        assert commutes == (g.scale == 1)


def test_check_mga_aff_and_negative_control():
    Q = rationals()
    act = lambda lam, a: lam * a  # noqa: E731
    rep = check_mga(positive_rationals(), Q, act, samples=500, seed=0, scalar=lambda lam: lam)
    assert [r["axiom"] for r in rep] == ["MGA1", "MGA2", "MGA3", "MGA4"]
    assert all(r["failures"] == [] for r in rep)
    assert "Abelian" in rep[3]["notes"]
    reverse = lambda lam, a: a / lam  # noqa: E731
    bad = check_mga(positive_rationals(), Q, reverse, samples=200, seed=0, axioms=("MGA2",))
    assert bad[0]["failures"]
    with pytest.raises(ActionViolation):
        semidirect(positive_rationals(), Q, reverse)


def test_ordered_group_laws_on_all_groups():
    for G in (rationals(), integers(), hahn_group([0, 1, 2]), aff_group(), semidirect_demo(),
              aff_group(hahn_group([0, 1]))):
        rep = check_ordered_group(G, samples=200, seed=3)
        assert rep["failures"] == [], (G.name, rep["failures"])


def test_puiseux_ordered_group_laws():
    rep = check_ordered_group(puiseux_group(24), samples=40, seed=3)
    assert rep["failures"] == []


def test_semidirect_embeddings_are_monotone_homomorphisms():
    A = aff_group()
    rng = random.Random(2)
    for _ in range(100):
        a, b = F(rng.randint(-9, 9), 2), F(rng.randint(-9, 9), 2)
        ea, eb = AffElem(F(1), a), AffElem(F(1), b)
        assert A.op(ea, eb) == AffElem(F(1), a + b)
        assert A.compare(ea, eb) == Ordering.of((a > b) - (a < b))
        f, g = F(rng.randint(1, 6), rng.randint(1, 6)), F(rng.randint(1, 6), rng.randint(1, 6))
        assert A.op(AffElem(f, F(0)), AffElem(g, F(0))) == AffElem(f * g, F(0))
        assert A.compare(AffElem(f, F(0)), AffElem(g, F(0))) == Ordering.of((f > g) - (f < g))


def test_quotient_examples():
    G = hahn_group([0, 1])
    Q = quotient(G, lambda a: all(i == 0 for i, _ in a.support),
                 lambda rng: H({0: rng.randint(-5, 5)}))
    assert Q.eq(H({0: 5, 1: 2}), H({1: 2}))
    assert Q.compare(H({1: 1}), H({0: 100})) == Ordering.GREATER
    trivial = quotient(G, lambda a: not a.support, lambda rng: HahnElem())
    assert trivial.compare(H({0: 1}), H({0: 2})) == Ordering.LESS
    with pytest.raises(NotConvex):
        quotient(G, lambda a: all(i == 1 for i, _ in a.support), lambda rng: H({1: 1}), smoke_samples=200)
    A = aff_group()
    with pytest.raises(NotNormal):
        quotient(A, lambda e: e.shift == 0, lambda rng: AffElem(F(rng.randint(1, 5)), F(0)), smoke_samples=50)


def test_quotient_comparison_independent_of_representative():
    Q = puiseux_mod_affine_kernel(24)
    rng = random.Random(4)
    n_sampler = Q.extra["n_sampler"]
    for _ in range(20):
        f, g = Q.sampler(rng), Q.sampler(rng)
        fn = S.compose(f, n_sampler(rng))
        assert Q.compare(f, g) == Q.compare(fn, g)


def test_leading_affine_examples():
    assert leading_affine(S.from_terms([(2, 4), (1, 1)])) == AffElem(F(2), as_algebraic(4))
    p = affine_product(AffElem(F(2), as_algebraic(1)), AffElem(F(1), as_algebraic(2)))
    assert p == AffElem(F(2), as_algebraic(4))
    assert leading_affine(S.compose(S.monomial(1, 2), S.monomial(2, 1))) == p
    assert leading_affine(S.from_terms([(1, 1), (F(1, 2), 1)])) == AffElem(F(1), as_algebraic(1))


def test_rank_disjoint_union_on_puiseux():
    rep = rank_disjoint_union_check(puiseux_group(32), puiseux_mod_affine_kernel(32), samples=20, seed=1)
    assert rep["contradictions"] == []
    n_ranks = [r for r in rep["rank_census"] if r.startswith("N:")]
    assert n_ranks and all("Level" in r for r in n_ranks)
    assert {r for r in rep["rank_census"] if r.startswith("G/N:")} <= {"G/N:Hom", "G/N:Top"}


def test_aff_rank_census_has_two_classes():
    A = aff_group()
    rng = random.Random(5)
    ranks = {A.rank(A.sampler(rng)) for _ in range(200)} - {None}
    assert len(ranks) == 2


@pytest.mark.parametrize("make", [aff_group, semidirect_demo, lambda: hahn_group([0, 1, 2])])
def test_small_suites_pass(make):
    for rec in gog_axiom_suite(make(), samples=200, seed=11):
        assert rec["failures"] == []
        assert rec["undecided"] == 0


def test_suite_is_reproducible():
    a = gog_axiom_suite(puiseux_group(24), samples=16, seed=5)
    b = gog_axiom_suite(puiseux_group(24), samples=16, seed=5)
    assert a == b


@settings(max_examples=50, deadline=None)
@given(st.integers(min_value=0, max_value=10 ** 6))
def test_torsion_free_and_lex_order(seed):
    rng = random.Random(seed)
    A = aff_group(hahn_group([0, 1]))
    f = A.sampler(rng)
    if not A.is_identity(f):
        assert not A.is_identity(A.power(f, 2))
        assert not A.is_identity(A.power(f, 3))
    g = A.sampler(rng)
    if f.scale != g.scale:
        assert A.compare(f, g) == Ordering.of((f.scale > g.scale) - (f.scale < g.scale))


def test_level_zero_centralizer_spot_check():
    # flows at Level(0) are translations, and germs commuting with x + 1 + 1/x have the shape x + r + o(1)
    from gog.gogcore import commutator, flow
    X = S.x()
    for t in (F(1), F(-3, 2), F(5)):
        d = S.sub(flow(level(0), t), S.add(X, S.constant(t)))
        assert d.is_exact_zero() or all(not d.step(i)[1] for i in range(8) if d.step(i))
    g = S.from_terms([(1, 1), (0, 1), (-1, 1)])
    family = [g, S.compose(g, g), S.func_inverse(g), S.compose(g, S.compose(g, g))]
    for h in family:
        c = commutator(h, g)
        assert all(c.step(i) is None or not S.sub(c, X).step(i)[1] for i in range(8))
        lead = S.leading(S.sub(h, X))
        assert lead.exponent == 0
