"""Sparse exact arithmetic in the group algebra Q[F].

An :class:`Element` is a finite map from reduced words to nonzero
``Fraction`` coefficients, i.e. a noncommutative Laurent polynomial.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational
from typing import Iterable, Mapping, Sequence

from .words import ONE, Word, format_word, parse_word


def _as_fraction(c) -> Fraction:
    if isinstance(c, Fraction):
        return c
    if isinstance(c, (int, Rational)):
        return Fraction(c)
    if isinstance(c, str):
        return Fraction(c)
    raise TypeError(f"coefficients must be exact rationals, got {type(c).__name__}")


class Element:
    """An element of Q[F].  Immutable; zero coefficients are never stored."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[Word, object] | Iterable[tuple[Word, object]] = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[Word, Fraction] = {}
        for w, c in items:
            c = _as_fraction(c)
            if c:
                nc = acc.get(w, 0) + c
                if nc:
                    acc[w] = nc
                else:
                    del acc[w]
        self._terms = acc
        self._hash = None

    @classmethod
    def _trusted(cls, terms: dict[Word, Fraction]) -> "Element":
        e = object.__new__(cls)
        e._terms = terms
        e._hash = None
        return e

    @classmethod
    def word(cls, w: Word, coeff=1) -> "Element":
        return cls({w: coeff})

    @classmethod
    def scalar(cls, c) -> "Element":
        return cls({ONE: c})

    @classmethod
    def parse(cls, text: str, rank: int = 26) -> "Element":
        from .parsing import parse_element

        return parse_element(text, rank)

    # -- inspection -----------------------------------------------------
    def terms(self) -> list[tuple[Word, Fraction]]:
        """``(word, coeff)`` pairs in shortlex word order."""
        return sorted(self._terms.items(), key=lambda t: t[0].sort_key())

    def support(self) -> list[Word]:
        return sorted(self._terms, key=Word.sort_key)

    def coeff(self, w: Word) -> Fraction:
        return self._terms.get(w, Fraction(0))

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __contains__(self, w: Word) -> bool:
        return w in self._terms

    def is_zero(self) -> bool:
        return not self._terms

    def is_scalar(self) -> bool:
        return all(w.is_identity() for w in self._terms)

    def is_monomial(self) -> bool:
        return len(self._terms) == 1

    def scalar_value(self) -> Fraction:
        return self._terms.get(ONE, Fraction(0))

    def max_length(self) -> int:
        return max((len(w) for w in self._terms), default=0)

    def max_generator(self) -> int:
        return max((w.max_generator() for w in self._terms), default=0)

    # -- arithmetic -----------------------------------------------------
    @staticmethod
    def _coerce(other) -> "Element | None":
        if isinstance(other, Element):
            return other
        if isinstance(other, Word):
            return Element._trusted({other: Fraction(1)})
        if isinstance(other, (int, Rational)):
            return Element.scalar(other)
        return None

    def __add__(self, other) -> "Element":
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        acc = dict(self._terms)
        for w, c in other._terms.items():
            nc = acc.get(w, 0) + c
            if nc:
                acc[w] = nc
            else:
                del acc[w]
        return Element._trusted(acc)

    __radd__ = __add__

    def __neg__(self) -> "Element":
        return Element._trusted({w: -c for w, c in self._terms.items()})

    def __sub__(self, other) -> "Element":
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "Element":
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other - self

    def scale(self, c) -> "Element":
        c = _as_fraction(c)
        if not c:
            return ZERO
        return Element._trusted({w: c * v for w, v in self._terms.items()})

    def __mul__(self, other) -> "Element":
        if isinstance(other, (int, Rational)):
            return self.scale(other)
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        acc: dict[Word, Fraction] = {}
        for w1, c1 in self._terms.items():
            for w2, c2 in other._terms.items():
                w = w1 * w2
                nc = acc.get(w, 0) + c1 * c2
                if nc:
                    acc[w] = nc
                else:
                    del acc[w]
        return Element._trusted(acc)

    def __rmul__(self, other) -> "Element":
        if isinstance(other, (int, Rational)):
            return self.scale(other)
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other * self

    def __pow__(self, n: int) -> "Element":
        if n < 0:
            if not self.is_monomial():
                raise ValueError("only monomials are invertible")
            (w, c), = self._terms.items()
            return Element._trusted({w.inverse(): 1 / c}) ** (-n)
        result = ONE_ELEMENT
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    # -- equality / display ---------------------------------------------
    def __eq__(self, other) -> bool:
        other_e = self._coerce(other)
        if other_e is None:
            return NotImplemented
        return self._terms == other_e._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __repr__(self) -> str:
        return f"Element({format_element(self)!r})"

    def __str__(self) -> str:
        return format_element(self)

    def to_json(self) -> list[dict[str, str]]:
        return [{"word": format_word(w), "coeff": format_rational(c)} for w, c in self.terms()]

    @classmethod
    def from_json(cls, data: Sequence[Mapping[str, str]], rank: int = 26) -> "Element":
        return cls((parse_word(t["word"], rank), Fraction(t["coeff"])) for t in data)


ZERO = Element()
ONE_ELEMENT = Element({ONE: 1})


def gen(index: int, power: int = 1) -> Element:
    return Element.word(Word.gen(index, power))


def add(u: Element, v: Element) -> Element:
    return u + v


def mul(u: Element, v: Element) -> Element:
    return u * v


def substitute(u: Element, images: Sequence[Word]) -> Element:
    """Apply the group homomorphism sending generator ``i`` to ``images[i]``."""
    out: dict[Word, Fraction] = {}
    for w, c in u.terms():
        img = ONE
        for x in w:
            g = images[abs(x) - 1]
            img = img * (g if x > 0 else g.inverse())
        out[img] = out.get(img, 0) + c
    return Element(out)


class Kind(enum.Enum):
    ZERO = "Zero"
    SCALAR = "Scalar"
    MONOMIAL = "Monomial"
    GENERAL = "General"


@dataclass(frozen=True)
class Classification:
    kind: Kind
    is_unit: bool


def classify(u: Element) -> Classification:
    """Zero / Scalar / Monomial / General, plus whether ``u`` is a unit.

    The units of Q[F] are exactly the nonzero monomials, so a nonzero scalar
    is reported as ``SCALAR`` with ``is_unit`` true.
    """
    if u.is_zero():
        return Classification(Kind.ZERO, False)
    if u.is_scalar():
        return Classification(Kind.SCALAR, True)
    if u.is_monomial():
        return Classification(Kind.MONOMIAL, True)
    return Classification(Kind.GENERAL, False)


def format_rational(c: Fraction) -> str:
    return str(c)


def format_element(u: Element) -> str:
    """Shortlex-ordered text that :func:`parse_element` reads back exactly."""
    if u.is_zero():
        return "0"
    out = []
    for i, (w, c) in enumerate(u.terms()):
        sign = "-" if c < 0 else "+"
        a = abs(c)
        if w.is_identity():
            body = format_rational(a)
        elif a == 1:
            body = format_word(w)
        else:
            body = f"{format_rational(a)}*{format_word(w)}"
        if i == 0:
            out.append(("-" if sign == "-" else "") + body)
        else:
            out.append(f" {sign} {body}")
    return "".join(out)
