import pytest
from hypothesis import given, strategies as st

from curvegroups.freegroup import (
    AlphabetError,
    FreeEndomorphism,
    FreeGroup,
    are_conjugate,
    commutator,
    conjugate,
)
from curvegroups.syntax import WordSyntaxError, parse_letters

F = FreeGroup(["a", "b", "c"])

letters = st.lists(st.tuples(st.sampled_from(F.names), st.sampled_from([1, -1])), max_size=12)
words = letters.map(F.word)


def test_parse_reduces_and_powers():
    assert str(F.parse("a b b^-1 a^2")) == "a a a"
    assert F.parse("(a b)^-2") == F.parse("b^-1 a^-1 b^-1 a^-1")
    assert F.parse("a b ^3") == F.parse("(a b)^3")
    assert F.parse("").is_identity()


def test_bad_syntax():
    with pytest.raises(WordSyntaxError):
        parse_letters("(a b")
    with pytest.raises(WordSyntaxError):
        parse_letters("a )")
    with pytest.raises(AlphabetError):
        F.parse("d")


def test_conjugate_convention():
    # x^g = g x g^-1
    assert conjugate(F.gen("a"), F.gen("b")) == F.parse("b a b^-1")
    assert commutator(F.gen("a"), F.gen("b")) == F.parse("a b a^-1 b^-1")


@given(words, words)
def test_inverse_of_product(u, v):
    assert (u * v).inverse() == v.inverse() * u.inverse()
    assert (u * u.inverse()).is_identity()


@given(words, words, words)
def test_associative(u, v, w):
    assert (u * v) * w == u * (v * w)


@given(words, words)
def test_conjugates_are_conjugate(u, g):
    assert are_conjugate(u, conjugate(u, g))


@given(words)
def test_cyclic_reduction_is_conjugate(u):
    r = u.cyclically_reduced()
    assert are_conjugate(u, r)
    if len(r) > 1:
        a, b = r.letters[0], r.letters[-1]
        assert not (a[0] == b[0] and a[1] == -b[1])


def test_compose_applies_right_factor_first():
    swap = FreeEndomorphism(F, {"a": "b", "b": "a", "c": "c"})
    push = FreeEndomorphism(F, {"a": "a b", "b": "b", "c": "c"})
    # push o swap: a -> swap -> b -> push -> b
    assert swap.compose(push).images["a"] == F.parse("b a")
    assert push.compose(swap).images["a"] == F.parse("b")


def test_automorphism_inverse():
    phi = FreeEndomorphism(F, {"a": "a b a^-1", "b": "a", "c": "c a"})
    inv = phi.inverse()
    assert phi.compose(inv).is_identity()
    assert inv.compose(phi).is_identity()
    assert phi.is_automorphism()


def test_non_automorphism_detected():
    phi = FreeEndomorphism(F, {"a": "a a", "b": "b", "c": "c"})
    assert not phi.is_automorphism()
