import itertools

import pytest

from oracles import permutation_inversions
from schubsmooth.bruhat import IntervalBudgetError
from schubsmooth.criterion import (
    Permutation,
    Status,
    contains_pattern,
    is_smooth,
    permutation_to_weyl,
    smooth_by_pattern,
    weyl_to_permutation,
)
from schubsmooth.weyl import enumerate_group, from_word, identity, longest_element


@pytest.mark.parametrize("name", ["A1", "A3", "B2", "C3", "D4", "F4", "E6"])
def test_identity_is_smooth(name, rs_of):
    rs = rs_of(name)
    assert is_smooth(rs, identity(rs)).status is Status.SMOOTH


def test_longest_a3_smooth(rs_of):
    rs = rs_of("A3")
    v = is_smooth(rs, longest_element(rs))
    assert v.status is Status.SMOOTH and v.palindromic and v.hull_closed


def test_4231_singular(rs_of):
    rs = rs_of("A3")
    v = is_smooth(rs, permutation_to_weyl(rs, Permutation((4, 2, 3, 1))))
    assert v.status is Status.SINGULAR
    assert v.palindromic is False


def test_b2_witness(b2):
    v = is_smooth(b2, from_word(b2, [2, 1, 2]))
    assert v.status is Status.SINGULAR
    assert v.palindromic is True and v.hull_closed is False
    assert v.hull_violations == ((-1, -1),)


def test_fast_mode_skips_hull_only_when_not_palindromic(rs_of):
    rs = rs_of("A3")
    w = permutation_to_weyl(rs, Permutation((4, 2, 3, 1)))
    v = is_smooth(rs, w, fast=True)
    assert v.status is Status.SINGULAR and v.hull_closed is None
    full = is_smooth(rs, w)
    assert full.hull_closed is not None and full.poincare == v.poincare


def test_g2_guard(rs_of):
    rs = rs_of("G2")
    for w in enumerate_group(rs):
        v = is_smooth(rs, w)
        assert v.status is Status.CRITERION_INAPPLICABLE
        assert v.palindromic is None and not v.criterion_only
        v = is_smooth(rs, w, allow_g2=True)
        assert v.status is Status.CRITERION_INAPPLICABLE
        assert v.criterion_only and v.palindromic is not None and v.hull_closed is not None


def test_budget_propagates(rs_of):
    rs = rs_of("A3")
    with pytest.raises(IntervalBudgetError):
        is_smooth(rs, longest_element(rs), max_interval=5)


def test_weyl_to_permutation_examples(a2, rs_of):
    assert weyl_to_permutation(a2, identity(a2)).one_line == (1, 2, 3)
    assert weyl_to_permutation(a2, from_word(a2, [1])).one_line == (2, 1, 3)
    a3 = rs_of("A3")
    w = from_word(a3, [2, 1, 3, 2])
    assert w.length == 4
    assert permutation_inversions(weyl_to_permutation(a3, w).one_line) == 4
    with pytest.raises(ValueError):
        weyl_to_permutation(rs_of("B2"), identity(rs_of("B2")))


@pytest.mark.parametrize("n", [3, 4, 5])
def test_permutation_bijection(n, rs_of):
    rs = rs_of(f"A{n - 1}")
    perms = set()
    for w in enumerate_group(rs):
        p = weyl_to_permutation(rs, w)
        assert permutation_inversions(p.one_line) == w.length
        assert permutation_to_weyl(rs, p) == w
        perms.add(p.one_line)
    assert perms == set(itertools.permutations(range(1, n + 1)))


def test_pattern_examples():
    P = Permutation
    assert contains_pattern(P((4, 2, 3, 1)), P((4, 2, 3, 1)))
    assert not contains_pattern(P((4, 2, 3, 1)), P((3, 4, 1, 2)))
    assert not contains_pattern(P((1, 2, 3, 4)), P((4, 2, 3, 1)))
    assert contains_pattern(P((5, 1, 3, 4, 2)), P((4, 2, 3, 1)))
    assert smooth_by_pattern(P((1, 2, 3, 4)))
    assert not smooth_by_pattern(P((4, 2, 3, 1)))


def test_smooth_count_s4():
    assert sum(smooth_by_pattern(Permutation(p)) for p in itertools.permutations(range(1, 5))) == 22


def test_permutation_validation():
    with pytest.raises(ValueError):
        Permutation((1, 1, 2))
    assert Permutation.parse("4,2,3,1") == Permutation.parse("4231") == Permutation((4, 2, 3, 1))


def test_rejects_foreign_element(a2, b2):
    with pytest.raises(ValueError):
        is_smooth(a2, identity(b2))
