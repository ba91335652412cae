"""Truncated noncommutative power series and the Magnus-Fox embedding.

Generator ``a`` maps to ``1 + x_a`` and ``a^-1`` to the geometric series
``1 - x_a + x_a^2 - ...``.  A monomial is a tuple of generator indices.
Comparing images term by term in degree-then-lex order gives a total order
on F invariant under multiplication on both sides.
"""
from __future__ import annotations

import enum
from fractions import Fraction
from functools import cmp_to_key, lru_cache
from typing import Mapping, Union

from .algebra import Element
from .errors import TruncationMismatch
from .words import Word, generator_name

Monomial = tuple[int, ...]


def _monomial_key(m: Monomial) -> tuple:
    return (len(m), m)


class TruncatedSeries:
    """Series modulo monomials of degree above ``N``.  Immutable."""

    __slots__ = ("N", "_terms")

    def __init__(self, N: int, terms: Mapping[Monomial, object] = ()):
        if N < 0:
            raise ValueError("truncation degree must be nonnegative")
        self.N = N
        acc = {}
        for m, c in dict(terms).items():
            c = Fraction(c)
            if c and len(m) <= N:
                acc[tuple(m)] = acc.get(tuple(m), 0) + c
        self._terms = {m: c for m, c in acc.items() if c}

    @classmethod
    def one(cls, N: int) -> "TruncatedSeries":
        return cls(N, {(): 1})

    def terms(self) -> list[tuple[Monomial, Fraction]]:
        return sorted(self._terms.items(), key=lambda t: _monomial_key(t[0]))

    def coeff(self, m: Monomial) -> Fraction:
        return self._terms.get(tuple(m), Fraction(0))

    def degree_part(self, d: int) -> dict[Monomial, Fraction]:
        return {m: c for m, c in self._terms.items() if len(m) == d}

    def __eq__(self, other) -> bool:
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return self.N == other.N and self._terms == other._terms

    def __hash__(self) -> int:
        return hash((self.N, frozenset(self._terms.items())))

    def __add__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        _check(self, other)
        acc = dict(self._terms)
        for m, c in other._terms.items():
            acc[m] = acc.get(m, 0) + c
        return TruncatedSeries(self.N, acc)

    def __sub__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        return self + other.scale(-1)

    def scale(self, c) -> "TruncatedSeries":
        return TruncatedSeries(self.N, {m: v * c for m, v in self._terms.items()})

    def __mul__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        return series_mul(self, other)

    def __repr__(self) -> str:
        return f"TruncatedSeries({self.N}, {format_series(self)!r})"

    def __str__(self) -> str:
        return format_series(self)


def _check(s: TruncatedSeries, t: TruncatedSeries) -> None:
    if s.N != t.N:
        raise TruncationMismatch(f"truncation degrees differ: {s.N} vs {t.N}")


def series_mul(s: TruncatedSeries, t: TruncatedSeries) -> TruncatedSeries:
    _check(s, t)
    N = s.N
    acc: dict[Monomial, Fraction] = {}
    for m1, c1 in s._terms.items():
        room = N - len(m1)
        for m2, c2 in t._terms.items():
            if len(m2) <= room:
                m = m1 + m2
                acc[m] = acc.get(m, 0) + c1 * c2
    return TruncatedSeries(N, acc)


def _letter_image(letter: int, N: int) -> TruncatedSeries:
    i = abs(letter) - 1
    if letter > 0:
        return TruncatedSeries(N, {(): 1, (i,): 1})
    return TruncatedSeries(N, {(i,) * k: (-1) ** k for k in range(N + 1)})


@lru_cache(maxsize=65536)
def _embed_letters(letters: tuple[int, ...], N: int) -> TruncatedSeries:
    if not letters:
        return TruncatedSeries.one(N)
    return series_mul(_embed_letters(letters[:-1], N), _letter_image(letters[-1], N))


def embed(u: Union[Element, Word], N: int) -> TruncatedSeries:
    """Magnus-Fox image of a word or element, truncated at degree ``N``."""
    if isinstance(u, Word):
        return _embed_letters(u.letters, N)
    total = TruncatedSeries(N)
    for w, c in u.terms():
        total = total + _embed_letters(w.letters, N).scale(c)
    return total


class Ordering(enum.IntEnum):
    LESS = -1
    EQUAL = 0
    GREATER = 1


def bi_order_compare(w1: Word, w2: Word) -> Ordering:
    """Compare Magnus-Fox images at the first differing monomial.

    Degrees are examined one at a time up to ``|w1| + |w2|``, which always
    suffices for distinct words.
    """
    if w1 == w2:
        return Ordering.EQUAL
    for d in range(1, len(w1) + len(w2) + 1):
        p1 = _embed_letters(w1.letters, d).degree_part(d)
        p2 = _embed_letters(w2.letters, d).degree_part(d)
        if p1 == p2:
            continue
        for m in sorted(set(p1) | set(p2)):
            c1, c2 = p1.get(m, 0), p2.get(m, 0)
            if c1 != c2:
                return Ordering.LESS if c1 < c2 else Ordering.GREATER
    raise AssertionError(f"distinct words {w1}, {w2} with equal truncated images")


bi_order_key = cmp_to_key(bi_order_compare)


def lowest(u: Element) -> Word:
    """Least support word of ``u`` in the bi-order."""
    return min(u.support(), key=bi_order_key)


def format_series(s: TruncatedSeries) -> str:
    if not s._terms:
        return "0"
    out = []
    for k, (m, c) in enumerate(s.terms()):
        runs = []
        i = 0
        while i < len(m):
            j = i
            while j < len(m) and m[j] == m[i]:
                j += 1
            name = f"x_{generator_name(m[i])}"
            runs.append(name if j - i == 1 else f"{name}^{j - i}")
            i = j
        mono = "*".join(runs)
        a = abs(c)
        body = str(a) if not m else (mono if a == 1 else f"{a}*{mono}")
        if k == 0:
            out.append(("-" if c < 0 else "") + body)
        else:
            out.append(f" {'-' if c < 0 else '+'} {body}")
    return "".join(out)
