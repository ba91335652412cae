"""Exact convex hulls in low dimension and gradings built from their facets.

Given a non-cyclically supported element ``u``, the exponent vectors of its
support together with the origin span a polytope ``K``.  Some facet of ``K``
misses the origin; its outward normal, read as a weighting, gives ``u``
positive degree with at least two words on top.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import gcd, lcm
from typing import Sequence

from . import linalg
from .algebra import Element
from .errors import DegenerateSpan, RankDeficient, ZeroElement
from .grading import Weighting
from .words import DEFAULT_RANK

Point = tuple[Fraction, ...]


@dataclass(frozen=True, order=True)
class Facet:
    """Supporting hyperplane ``normal . x <= offset``.

    ``normal`` is the primitive integer outward normal, so a facet has
    exactly one representation.
    """

    normal: tuple[int, ...]
    offset: Fraction

    def value(self, x: Sequence[Fraction]) -> Fraction:
        return sum((Fraction(n) * c for n, c in zip(self.normal, x)), Fraction(0))


def _primitive_normal(vec: Sequence[Fraction]) -> tuple[int, ...]:
    den = lcm(*(Fraction(v).denominator for v in vec))
    ints = [int(Fraction(v) * den) for v in vec]
    g = 0
    for v in ints:
        g = gcd(g, v)
    return tuple(v // g for v in ints)


def affine_rank(points: Sequence[Sequence[object]]) -> int:
    if not points:
        return -1
    p0 = points[0]
    diffs = [[Fraction(a) - Fraction(b) for a, b in zip(p, p0)] for p in points[1:]]
    return linalg.rank(linalg.dense_rows(diffs))


def facets(points: Sequence[Sequence[object]]) -> list[Facet]:
    """All facets of the convex hull of full-dimensional rational points.

    Brute force over ``dim``-subsets; fine for ``dim <= 4`` and a few dozen
    points.
    """
    pts = sorted({tuple(Fraction(c) for c in p) for p in points})
    if not pts:
        raise DegenerateSpan("no points")
    dim = len(pts[0])
    if affine_rank(pts) != dim:
        raise DegenerateSpan(f"points do not affinely span dimension {dim}")
    found: set[Facet] = set()
    for combo in combinations(range(len(pts)), dim):
        p0 = pts[combo[0]]
        diffs = [[a - b for a, b in zip(pts[i], p0)] for i in combo[1:]]
        null = linalg.nullspace(linalg.dense_rows(diffs), dim)
        if len(null) != 1:
            continue
        normal = _primitive_normal([null[0].get(j, 0) for j in range(dim)])
        side = [sum((n * c for n, c in zip(normal, p)), Fraction(0)) for p in pts]
        b = side[combo[0]]
        if all(s <= b for s in side):
            found.add(Facet(normal, b))
        elif all(s >= b for s in side):
            found.add(Facet(tuple(-n for n in normal), -b))
    return sorted(found)


def facets_meet(fs: Sequence[Facet]) -> bool:
    """Whether some point lies on every facet hyperplane."""
    if not fs:
        return True
    dim = len(fs[0].normal)
    rows = []
    for f in fs:
        row = {j: n for j, n in enumerate(f.normal) if n}
        if f.offset:
            row[dim] = f.offset
        rows.append(row)
    return not any(min(r) == dim for r in linalg.row_reduce(rows))


def support_rank(u: Element, rank: int) -> int:
    """Rank of the span of the support's exponent vectors in ``Q^rank``."""
    return linalg.rank(linalg.dense_rows([w.exponent_vector(rank) for w in u.support()]))


def construct_weighting(u: Element, rank: int | None = None) -> Weighting:
    """Weighting ``h`` with ``h(u) > 0`` and a non-monomial leading component.

    Exponent vectors of the support are written in coordinates of their span
    (the pivot coordinates of its reduced echelon basis), the hull with the
    origin is formed, and the lexicographically least outward normal among
    facets missing the origin is extended by zero off the pivots.
    """
    if u.is_zero():
        raise ZeroElement("zero has no grading witness")
    if rank is None:
        rank = max(DEFAULT_RANK, u.max_generator())
    vectors = [w.exponent_vector(rank) for w in u.support()]
    span = linalg.row_reduce(linalg.dense_rows(vectors))
    if len(span) < 2:
        raise RankDeficient(f"support spans rank {len(span)} < 2 in the abelianization")
    pivots = [min(r) for r in span]
    pts = {tuple(Fraction(v[c]) for c in pivots) for v in vectors}
    pts.add(tuple(Fraction(0) for _ in pivots))
    away = [f for f in facets(sorted(pts)) if f.offset > 0]
    chosen = min(away, key=lambda f: f.normal)
    weights = [0] * rank
    for c, n in zip(pivots, chosen.normal):
        weights[c] = n
    return Weighting(weights)
