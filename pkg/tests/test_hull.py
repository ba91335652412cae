import random
from fractions import Fraction

import numpy as np
import pytest
from scipy.spatial import ConvexHull

from fgalg.algebra import Element
from fgalg.errors import DegenerateSpan, RankDeficient, ZeroElement
from fgalg.grading import Weighting, degree, leading
from fgalg.hull import Facet, affine_rank, construct_weighting, facets, facets_meet
from fgalg.words import Word

from conftest import E


def test_triangle():
    fs = facets([(0, 0), (1, 0), (0, 1)])
    assert fs == sorted([Facet((-1, 0), 0), Facet((0, -1), 0), Facet((1, 1), 1)])


def test_interior_point_on_facet():
    fs = facets([(0, 0), (2, 0), (0, 2), (1, 1)])
    assert len(fs) == 3
    assert Facet((1, 1), 2) in fs


def test_one_dimensional():
    assert facets([(0,), (2,)]) == [Facet((-1,), 0), Facet((1,), 2)]


def test_degenerate():
    with pytest.raises(DegenerateSpan):
        facets([(0, 0), (1, 1), (2, 2)])
    with pytest.raises(DegenerateSpan):
        facets([])


def random_points(rng, dim, n):
    return [tuple(Fraction(rng.randint(-6, 6), rng.randint(1, 3)) for _ in range(dim)) for _ in range(n)]


def scipy_facets(points):
    hull = ConvexHull(np.array([[float(c) for c in p] for p in points]))
    planes = set()
    for eq in hull.equations:
        n, b = eq[:-1], -eq[-1]
        scale = max(abs(n))
        planes.add(tuple(round(x / scale, 6) for x in n) + (round(b / scale, 6),))
    return planes


@pytest.mark.parametrize("dim", [2, 3])
def test_facets_against_scipy(dim):
    rng = random.Random(dim)
    checked = 0
    while checked < 20:
        pts = random_points(rng, dim, rng.randint(dim + 1, 9))
        if affine_rank(pts) != dim:
            continue
        fs = facets(pts)
        ours = set()
        for f in fs:
            scale = max(abs(x) for x in f.normal)
            ours.add(tuple(round(x / scale, 6) for x in f.normal) + (round(float(f.offset) / scale, 6),))
            # every point below, at least dim affinely independent points on it
            assert all(f.value(p) <= f.offset for p in pts)
            on = [p for p in pts if f.value(p) == f.offset]
            assert affine_rank(on) == dim - 1
        assert ours == scipy_facets(pts)
        checked += 1


@pytest.mark.parametrize("dim", [2, 3])
def test_facets_have_empty_intersection(dim):
    rng = random.Random(100 + dim)
    for _ in range(15):
        pts = random_points(rng, dim, rng.randint(dim + 1, 8))
        if affine_rank(pts) == dim:
            assert not facets_meet(facets(pts))


def test_facets_meet_consistent_system():
    assert facets_meet([Facet((1, 0), 1), Facet((0, 1), 2)])
    assert not facets_meet([Facet((1, 0), 1), Facet((-1, 0), 0)])


def test_construct_weighting_examples():
    h = construct_weighting(E("a+b"))
    assert h == Weighting([1, 1])
    assert degree(h, E("a+b")) == 1
    assert leading(h, E("a+b")) == E("a+b")
    h = construct_weighting(E("ab+b"))
    assert h == Weighting([0, 1])
    assert leading(h, E("ab+b")) == E("ab+b")
    with pytest.raises(RankDeficient):
        construct_weighting(E("ab+ba"))
    with pytest.raises(ZeroElement):
        construct_weighting(E("0"))


def test_construct_weighting_random():
    rng = random.Random(17)
    done = 0
    while done < 40:
        terms = {}
        for _ in range(rng.randint(2, 5)):
            letters = [rng.choice([1, -1, 2, -2, 3, -3]) for _ in range(rng.randint(0, 4))]
            terms[Word(letters)] = rng.randint(-3, 3) or 1
        u = Element(terms)
        try:
            h = construct_weighting(u, 3)
        except RankDeficient:
            continue
        assert degree(h, u) > 0
        assert len(leading(h, u)) >= 2
        done += 1
