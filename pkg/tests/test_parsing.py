import pytest
from hypothesis import given

from fgalg.algebra import Element, format_element
from fgalg.errors import ParseError, UnknownGenerator
from fgalg.parsing import parse_element, parse_word_expr
from fgalg.words import Word

from conftest import W, elements


def test_examples():
    assert parse_element("a*B + 3/2") == Element({W("ab^-1"): 1, Word(): "3/2"})
    assert parse_element("(a+b)^2") == parse_element("a^2 + ab + ba + b^2")


def test_syntax_error_offset():
    with pytest.raises(ParseError) as exc:
        parse_element("a^")
    assert exc.value.position == 2
    assert "offset 2" in str(exc.value)


@pytest.mark.parametrize("text", ["", "a +", "(a", "a)", "a^x", "2/0", "a^1.5", "++a", "(a+b)^-1", "a * 4"])
def test_rejects(text):
    with pytest.raises((ParseError, ZeroDivisionError, ValueError)):
        parse_element(text)


def test_unknown_generator():
    with pytest.raises(UnknownGenerator):
        parse_element("a + c", rank=2)
    assert parse_element("a + c", rank=3) == parse_element("c + a")


@pytest.mark.parametrize("text,expected", [
    ("a^-1", "A"),
    ("(ab)^-1", "BA"),
    ("2(a - b)", "2a - 2b"),
    ("a b", "ab"),
    ("-a^2 + a*a", "0"),
    ("1/2 * a * b", "1/2*ab"),
    ("(a^2)^3", "a^6"),
])
def test_precedence_and_forms(text, expected):
    assert parse_element(text) == parse_element(expected)


def test_word_expr():
    assert parse_word_expr("a^2 b^-1") == W("aaB")
    with pytest.raises(ParseError):
        parse_word_expr("a+b")


@given(elements(rank=3, max_len=4, max_terms=5))
def test_roundtrip(u):
    assert parse_element(format_element(u)) == u
