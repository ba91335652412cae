"""Recursive-descent parser for algebra elements.

Grammar (whitespace-insensitive)::

    element := ['+'|'-'] term (('+'|'-') term)*
    term    := coeff | coeff ['*'] factors | factors
    factors := factor (['*'] factor)*
    factor  := atom ['^' integer]
    atom    := letter | '(' element ')'
    coeff   := integer ['/' positive-integer]

Lowercase letters are generators, uppercase their inverses.  Power binds
tighter than concatenation, which binds tighter than ``+``/``-``.
"""
from __future__ import annotations

from fractions import Fraction

from .algebra import ONE_ELEMENT, Element
from .errors import ParseError, UnknownGenerator
from .words import MAX_RANK, Word


class _Parser:
    def __init__(self, text: str, rank: int):
        if not 1 <= rank <= MAX_RANK:
            raise ValueError(f"rank must be in 1..{MAX_RANK}")
        self.text = text
        self.rank = rank
        self.pos = 0

    def _skip(self) -> None:
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def _peek(self) -> str:
        self._skip()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def _expect(self, ch: str) -> None:
        if self._peek() != ch:
            raise ParseError(f"expected {ch!r}", self.pos)
        self.pos += 1

    def _integer(self, signed: bool) -> int:
        self._skip()
        start = self.pos
        if signed and self._peek() in ("+", "-"):
            self.pos += 1
            self._skip()
        digits_at = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if self.pos == digits_at:
            raise ParseError("expected integer", self.pos)
        return int(self.text[start:self.pos].replace(" ", ""))

    def parse(self) -> Element:
        result = self.element()
        if self._peek():
            raise ParseError(f"unexpected {self._peek()!r}", self.pos)
        return result

    def element(self) -> Element:
        sign = 1
        if self._peek() in ("+", "-"):
            sign = -1 if self._peek() == "-" else 1
            self.pos += 1
        total = self.term().scale(sign)
        while self._peek() in ("+", "-"):
            sign = -1 if self._peek() == "-" else 1
            self.pos += 1
            total = total + self.term().scale(sign)
        return total

    def _starts_factor(self) -> bool:
        ch = self._peek()
        return ch == "(" or (ch.isascii() and ch.isalpha())

    def term(self) -> Element:
        ch = self._peek()
        if ch.isdigit():
            coeff = Fraction(self._integer(signed=False))
            if self._peek() == "/":
                self.pos += 1
                self._skip()
                at = self.pos
                den = self._integer(signed=False)
                if den == 0:
                    raise ParseError("zero denominator", at)
                coeff /= den
            if self._peek() == "*":
                self.pos += 1
                if not self._starts_factor():
                    raise ParseError("expected factor after '*'", self.pos)
            if not self._starts_factor():
                return Element.scalar(coeff)
            return self.factors().scale(coeff)
        if not self._starts_factor():
            raise ParseError("expected term", self.pos)
        return self.factors()

    def factors(self) -> Element:
        result = self.factor()
        while True:
            if self._peek() == "*":
                self.pos += 1
                if not self._starts_factor():
                    raise ParseError("expected factor after '*'", self.pos)
            elif not self._starts_factor():
                return result
            result = result * self.factor()

    def factor(self) -> Element:
        ch = self._peek()
        at = self.pos
        if ch == "(":
            self.pos += 1
            base = self.element()
            self._expect(")")
        else:
            index = ord(ch.lower()) - ord("a")
            if index >= self.rank:
                raise UnknownGenerator(f"generator {ch!r} outside rank {self.rank}")
            self.pos += 1
            base = Element.word(Word.gen(index, -1 if ch.isupper() else 1))
        if self._peek() == "^":
            self.pos += 1
            n = self._integer(signed=True)
            if n < 0 and not base.is_monomial():
                raise ParseError("negative power of a non-monomial", at)
            return base ** n if n else ONE_ELEMENT
        return base


def parse_element(text: str, rank: int = MAX_RANK) -> Element:
    """Parse an element; e.g. ``"a*B + 3/2"`` is ``a b^-1 + 3/2``."""
    return _Parser(text, rank).parse()


def parse_word_expr(text: str, rank: int = MAX_RANK) -> Word:
    """Parse text that must denote a single group element with coefficient 1."""
    u = parse_element(text, rank)
    if not u.is_monomial() or u.terms()[0][1] != 1:
        raise ParseError("expected a group element", 0)
    return u.terms()[0][0]
