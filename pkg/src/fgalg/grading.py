"""Gradings of Q[F] induced by homomorphisms F -> (Q, +).

The degree of a nonzero element is the largest weight of a word in its
support; the zero element has degree :data:`NEG_INF`.  Read as valuations
the sign flips: ``v = -degree``.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import total_ordering
from typing import Sequence, Union

from .algebra import Element
from .errors import ZeroElement
from .words import Word


@total_ordering
class NegativeInfinity:
    """The degree of zero.  Compares below every rational; absorbs addition."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __eq__(self, other) -> bool:
        return other is self

    def __lt__(self, other) -> bool:
        return other is not self

    def __hash__(self) -> int:
        return hash("-inf")

    def __add__(self, other):
        return self

    __radd__ = __add__

    def __repr__(self) -> str:
        return "NEG_INF"

    def __str__(self) -> str:
        return "-inf"


NEG_INF = NegativeInfinity()
Degree = Union[Fraction, NegativeInfinity]


@dataclass(frozen=True)
class Weighting:
    """One rational weight per generator."""

    weights: tuple[Fraction, ...]

    def __init__(self, weights: Sequence[object]):
        object.__setattr__(self, "weights", tuple(Fraction(w) for w in weights))

    @classmethod
    def parse(cls, text: str) -> "Weighting":
        return cls([Fraction(p.strip()) for p in text.split(",") if p.strip()])

    @property
    def rank(self) -> int:
        return len(self.weights)

    def max_abs(self) -> Fraction:
        return max((abs(w) for w in self.weights), default=Fraction(0))

    def __call__(self, w: Word) -> Fraction:
        return word_degree(self, w)

    def __neg__(self) -> "Weighting":
        return Weighting([-w for w in self.weights])

    def __str__(self) -> str:
        return ",".join(str(w) for w in self.weights)


def word_degree(h: Weighting, w: Word) -> Fraction:
    total = Fraction(0)
    for x in w:
        i = abs(x) - 1
        if i >= len(h.weights):
            raise ValueError(f"weighting of rank {h.rank} cannot grade generator {i}")
        total += h.weights[i] if x > 0 else -h.weights[i]
    return total


def degree(h: Weighting, u: Element) -> Degree:
    if u.is_zero():
        return NEG_INF
    return max(word_degree(h, w) for w in u.support())


def lowest_degree(h: Weighting, u: Element) -> Degree:
    """Smallest word degree in the support (``NEG_INF`` for zero)."""
    if u.is_zero():
        return NEG_INF
    return min(word_degree(h, w) for w in u.support())


def leading(h: Weighting, u: Element) -> Element:
    """Highest-degree homogeneous component of ``u``."""
    if u.is_zero():
        raise ZeroElement("zero has no leading component")
    d = degree(h, u)
    return Element((w, c) for w, c in u.terms() if word_degree(h, w) == d)


def is_homogeneous(h: Weighting, u: Element) -> bool:
    return not u.is_zero() and len({word_degree(h, w) for w in u.support()}) == 1


def decompose(h: Weighting, u: Element) -> dict[Fraction, Element]:
    """Homogeneous components keyed by degree, highest degree first."""
    parts: dict[Fraction, dict[Word, Fraction]] = {}
    for w, c in u.terms():
        parts.setdefault(word_degree(h, w), {})[w] = c
    return {d: Element(parts[d]) for d in sorted(parts, reverse=True)}
