import pytest
from hypothesis import given

from fgalg.errors import IdentityWord, ParseError, UnknownGenerator
from fgalg.words import (
    ONE, Word, all_words, cyclic_decomposition, format_word, inverse, mul,
    parse_word, prefix_test, primitive_root, suffix_test,
)

from conftest import W, words


@pytest.mark.parametrize("w1,w2,expected", [
    ("ab", "b^-1a^-1", "1"),
    ("ab", "b^-1a", "a^2"),
    ("a", "b", "ab"),
])
def test_mul_examples(w1, w2, expected):
    assert mul(W(w1), W(w2)) == W(expected)


@pytest.mark.parametrize("w,expected", [("ab", "b^-1a^-1"), ("1", "1"), ("a^-1b", "b^-1a")])
def test_inverse_examples(w, expected):
    assert inverse(W(w)) == W(expected)


def test_prefix_examples():
    assert prefix_test(W("a"), W("ab"))
    assert not prefix_test(W("b"), W("ab"))
    assert all(prefix_test(ONE, w) for w in all_words(2, 3))
    assert suffix_test(W("b"), W("ab"))


@pytest.mark.parametrize("w,p,s", [("b^-1ab", "b", "a"), ("ab", "1", "ab"), ("aba^-1", "a^-1", "b")])
def test_cyclic_decomposition_examples(w, p, s):
    assert cyclic_decomposition(W(w)) == (W(p), W(s))


def test_cyclic_decomposition_identity():
    with pytest.raises(IdentityWord):
        cyclic_decomposition(ONE)


@pytest.mark.parametrize("w,r,m", [("abab", "ab", 2), ("a^-3", "a^-1", 3), ("b^-1a^2b", "b^-1ab", 2)])
def test_primitive_root_examples(w, r, m):
    assert primitive_root(W(w)) == (W(r), m)


def test_primitive_root_identity():
    with pytest.raises(IdentityWord):
        primitive_root(ONE)


def test_associativity_exhaustive():
    ball = all_words(2, 2)
    for x in ball:
        for y in ball:
            xy = x * y
            for z in ball:
                assert xy * z == x * (y * z)


def test_associativity_length4_sampled():
    ball = all_words(2, 4)
    for i, x in enumerate(ball[::7]):
        for y in ball[i % 5::11]:
            for z in ball[i % 3::13]:
                assert (x * y) * z == x * (y * z)


def test_inverse_law_exhaustive():
    for w in all_words(2, 5):
        assert w * inverse(w) == ONE
        assert inverse(w) * w == ONE


def test_ball_sizes():
    # reduced words of length n on 2 generators: 4 * 3^(n-1)
    counts = [0] * 5
    for w in all_words(2, 4):
        counts[len(w)] += 1
    assert counts == [1, 4, 12, 36, 108]


def test_all_words_shortlex_sorted():
    ball = all_words(2, 3)
    assert ball == sorted(ball)
    assert ball[:5] == [ONE, W("a"), W("A"), W("b"), W("B")]


@given(words(3, 8))
def test_primitive_root_properties(w):
    if w.is_identity():
        return
    r, m = primitive_root(w)
    assert m >= 1
    assert r ** m == w
    assert primitive_root(r) == (r, 1)


@given(words(3, 8))
def test_cyclic_decomposition_properties(w):
    if w.is_identity():
        return
    p, s = cyclic_decomposition(w)
    assert p.inverse() * s * p == w
    assert s.is_cyclically_reduced()
    assert len(w) == 2 * len(p) + len(s)


@given(words(3, 8))
def test_format_parse_roundtrip(w):
    assert parse_word(format_word(w)) == w


def test_format_runs_and_inverses():
    assert format_word(W("aaB")) == "a^2b^-1"
    assert format_word(ONE) == "1"
    assert format_word(W("a^-3")) == "a^-3"


def test_parse_errors():
    with pytest.raises(UnknownGenerator):
        parse_word("c", rank=2)
    with pytest.raises(ParseError):
        parse_word("a+")


def test_words_are_hashable_and_reduced():
    assert Word([1, -1]) == ONE
    assert len({W("ab"), W("abbB"), W("ba")}) == 2
    assert W("a") ** -2 == W("A") ** 2
