import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from oracles import fourier_motzkin_in_hull
from schubsmooth.bruhat import is_palindromic, poincare_polynomial
from schubsmooth.curves import CurveSet, curve_roots, hull_closed, hull_report
from schubsmooth.hull import convex_weights, in_convex_hull
from schubsmooth.rootsys import CartanType, build_root_system
from schubsmooth.weyl import enumerate_group, from_word, identity, longest_element


def test_curve_roots_examples(b2, rs_of):
    for name in ["A2", "B2", "G2", "D4"]:
        rs = rs_of(name)
        assert curve_roots(rs, identity(rs)).roots == frozenset()
        assert curve_roots(rs, longest_element(rs)).roots == frozenset(rs.negative_roots)
    cs = curve_roots(b2, from_word(b2, [2, 1, 2]))
    assert cs.roots == {(-1, 0), (0, -1), (-1, -2)}


def test_hull_examples():
    gens = [(-1, 0), (0, -1), (-1, -2)]
    for g in gens:
        assert in_convex_hull(g, gens)
    assert in_convex_hull((-1, -1), [(-1, 0), (-1, -2)])
    assert convex_weights((-1, -1), [(-1, 0), (-1, -2)]) == [Fraction(1, 2), Fraction(1, 2)]
    assert not in_convex_hull((-1, -1), [(-1, 0), (0, -1)])
    assert not in_convex_hull((-1, -1), [])


def test_single_generator_hull_is_a_point():
    assert in_convex_hull((0, -1, -1), [(0, -1, -1)])
    assert not in_convex_hull((0, -1, 0), [(0, -1, -1)])


def test_hull_report_examples(b2, rs_of):
    rep = hull_report(b2, CurveSet(identity(b2), frozenset()))
    assert rep.members == rep.violations == frozenset()
    for name in ["B2", "C3", "A3"]:
        rs = rs_of(name)
        rep = hull_report(rs, curve_roots(rs, longest_element(rs)))
        assert rep.violations == frozenset()
    cs = curve_roots(b2, from_word(b2, [2, 1, 2]))
    rep = hull_report(b2, cs)
    assert rep.violations == {(-1, -1)}
    weights = dict(zip(cs.sorted_roots(), rep.witnesses[(-1, -1)]))
    order = [(-1, 0), (0, -1), (-1, -2)]
    assert [weights[r] for r in order] == [Fraction(1, 2), 0, Fraction(1, 2)]


def test_hull_closed_examples(b2):
    assert hull_closed(b2, curve_roots(b2, identity(b2)))
    cs = curve_roots(b2, from_word(b2, [1, 2, 1]))
    assert cs.roots == {(-1, 0), (0, -1), (-1, -1)}
    assert hull_closed(b2, cs)
    assert not hull_closed(b2, curve_roots(b2, from_word(b2, [2, 1, 2])))


@pytest.mark.parametrize("name", ["A3", "A4", "B3", "C3", "D4", "G2"])
def test_sweep_invariants(name, rs_of):
    rs = rs_of(name)
    for w in enumerate_group(rs):
        cs = curve_roots(rs, w)
        rep = hull_report(rs, cs)
        assert cs.roots <= rep.members
        assert rep.violations <= rep.members
        assert all(all(c <= 0 for c in r) for r in rep.members)
        # Deodhar
        assert len(cs) >= w.length
        if is_palindromic(poincare_polynomial(w)):
            assert len(cs) == w.length


def random_instance(rng):
    name = rng.choice(["A2", "B2", "G2", "A3", "B3", "C3", "A4", "B4", "C4", "D4", "F4"])
    rs = build_root_system(CartanType.parse(name))
    negs = list(rs.negative_roots)
    gens = rng.sample(negs, rng.randint(1, min(6, len(negs))))
    point = rng.choice(rs.all_roots)
    return point, gens


def test_simplex_matches_fourier_motzkin():
    rng = random.Random(11)
    hits = 0
    for _ in range(300):
        point, gens = random_instance(rng)
        got = in_convex_hull(point, gens)
        assert got == fourier_motzkin_in_hull(point, gens), (point, gens)
        hits += got
    assert hits > 30


@settings(max_examples=80, deadline=None)
@given(st.sampled_from(["B3", "C3", "F4", "A4"]), st.data())
def test_hull_monotone_in_generators(name, data):
    rs = build_root_system(CartanType.parse(name))
    negs = list(rs.negative_roots)
    gens = data.draw(st.lists(st.sampled_from(negs), min_size=1, max_size=5, unique=True))
    extra = data.draw(st.lists(st.sampled_from(negs), max_size=3, unique=True))
    point = data.draw(st.sampled_from(rs.all_roots))
    if in_convex_hull(point, gens):
        assert in_convex_hull(point, gens + [g for g in extra if g not in gens])


@settings(max_examples=80, deadline=None)
@given(st.sampled_from(["B3", "C4", "F4", "G2"]), st.data())
def test_weights_are_a_certificate(name, data):
    rs = build_root_system(CartanType.parse(name))
    negs = list(rs.negative_roots)
    gens = data.draw(st.lists(st.sampled_from(negs), min_size=1, max_size=6, unique=True))
    point = data.draw(st.sampled_from(negs))
    lam = convex_weights(point, gens)
    if lam is not None:
        assert all(x >= 0 for x in lam) and sum(lam) == 1
        assert tuple(sum(x * g[c] for x, g in zip(lam, gens)) for c in range(rs.rank)) == point
