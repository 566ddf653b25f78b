import pytest
from hypothesis import given, strategies as st

from braidlift.perm import (
    Permutation,
    Transposition,
    compose,
    conjugate,
    conjugate_in_sd,
    cycles,
    is_transitive,
    parse_permutation,
    parse_transposition,
)


def perms(d):
    return st.permutations(list(range(1, d + 1))).map(lambda xs: Permutation(tuple(xs)))


def test_transposition_is_normalised():
    assert Transposition(3, 1) == Transposition(1, 3)
    assert str(Transposition(2, 1)) == "(1 2)"
    with pytest.raises(ValueError):
        Transposition(2, 2)


def test_compose_applies_left_factor_first():
    a = Transposition(1, 2).as_permutation(3)
    b = Transposition(2, 3).as_permutation(3)
    ab = compose(a, b)
    # 1 -> 2 under a, then 2 -> 3 under b
    assert ab(1) == 3
    assert cycles(ab) == [[1, 3, 2]]


def test_cycles_include_fixed_points():
    p = Permutation.from_cycles(4, [[2, 3]])
    assert cycles(p) == [[1], [2, 3], [4]]
    assert str(p) == "(2 3)"
    assert str(Permutation.identity(3)) == "()"


def test_conjugate_relabels_support():
    t = Transposition(1, 2)
    s = Transposition(2, 3)
    assert conjugate(t, s) == Transposition(1, 3)
    assert conjugate(s, s) == s
    assert conjugate(Transposition(1, 2), Transposition(3, 4)) == Transposition(1, 2)


def test_transitivity():
    assert is_transitive([Transposition(1, 2), Transposition(2, 3)], 3)
    assert not is_transitive([Transposition(1, 2), Transposition(1, 2)], 3)
    assert not is_transitive([Transposition(1, 2), Transposition(3, 4)], 4)


def test_parsers():
    assert parse_transposition("(2 1)") == Transposition(1, 2)
    assert parse_permutation("(1 2 3)", 4)(3) == 1
    with pytest.raises(ValueError):
        parse_transposition("(1 2 3)")


@given(perms(5), perms(5), perms(5))
def test_compose_associative(p, q, r):
    assert compose(compose(p, q), r) == compose(p, compose(q, r))


@given(perms(6))
def test_inverse_and_cycle_partition(p):
    assert compose(p, p.inverse()).is_identity()
    cs = cycles(p)
    assert sorted(x for c in cs for x in c) == list(range(1, 7))
    assert conjugate_in_sd(p, p.inverse())
