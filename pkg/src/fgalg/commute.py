"""Centralizers in Q[F] and the structural verdicts about them.

Centralizers are infinite-dimensional, so everything here works inside the
span of reduced words of length at most ``L``.  Within that bound the basis
is exact: it spans precisely the commuting elements supported on the ball.
Nothing beyond the bound is claimed.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass, field
from fractions import Fraction
from math import floor, gcd, lcm
from typing import Sequence

from . import linalg
from .algebra import ONE_ELEMENT, Element, substitute
from .errors import (
    DimensionMismatch,
    NonpositiveDegree,
    NotHomogeneous,
    NotInBasisSpan,
    ProportionalityFailure,
    ScalarInput,
    VanishingWeighting,
)
from .grading import NEG_INF, Weighting, degree, is_homogeneous, leading, word_degree
from .hull import construct_weighting, support_rank
from .subgroup import FoldedGraph, fold
from .words import DEFAULT_RANK, ONE, Word, all_words, primitive_root


def commutes(u: Element, v: Element) -> bool:
    return u * v == v * u


def _ambient_rank(u: Element, rank: int | None) -> int:
    needed = u.max_generator()
    if rank is None:
        return max(DEFAULT_RANK, needed)
    if rank < needed:
        raise ValueError(f"element needs rank {needed}, got {rank}")
    return rank


def _require_nonscalar(u: Element) -> None:
    if u.is_scalar():
        raise ScalarInput("scalars commute with everything")


def _to_vector(u: Element, index: dict[Word, int]) -> dict[int, Fraction]:
    return {index[w]: c for w, c in u.terms()}


def _from_vector(vec: dict[int, Fraction], words: Sequence[Word]) -> Element:
    return Element({words[i]: c for i, c in vec.items()})


def _commutant(u: Element, columns: Sequence[Word]) -> list[Element]:
    """Reduced echelon basis of ``{v in span(columns) : uv = vu}``."""
    rows: dict[Word, dict[int, Fraction]] = {}
    terms = u.terms()
    for j, w in enumerate(columns):
        for x, c in terms:
            for prod, sign in ((x * w, 1), (w * x, -1)):
                row = rows.setdefault(prod, {})
                nv = row.get(j, 0) + sign * c
                if nv:
                    row[j] = nv
                else:
                    row.pop(j, None)
    null = linalg.nullspace([r for r in rows.values() if r], len(columns))
    return [_from_vector(v, columns) for v in linalg.row_reduce(null)]


@dataclass(frozen=True)
class CentralizerBasis:
    """Commuting elements of ``center_of`` supported on words of length <= ``bound``."""

    center_of: Element
    bound: int
    basis: tuple[Element, ...]
    rank: int = DEFAULT_RANK

    @property
    def dim(self) -> int:
        return len(self.basis)

    def __iter__(self):
        return iter(self.basis)

    def __len__(self) -> int:
        return len(self.basis)


def centralizer_basis(u: Element, L: int, rank: int | None = None) -> CentralizerBasis:
    """Exact bounded centralizer, in reduced echelon form over shortlex columns.

    >>> from fgalg.parsing import parse_element
    >>> [str(b) for b in centralizer_basis(parse_element("a"), 1)]
    ['1', 'a', 'a^-1']
    """
    _require_nonscalar(u)
    if L < 1:
        raise ValueError("bound must be at least 1")
    rank = _ambient_rank(u, rank)
    basis = _commutant(u, all_words(rank, L))
    return CentralizerBasis(u, L, tuple(basis), rank)


def homogeneous_commutant(u: Element, h: Weighting, L: int, rank: int | None = None) -> list[Element]:
    """Commuting elements supported on words of length <= ``L`` and degree ``h(u)``."""
    _require_nonscalar(u)
    if not is_homogeneous(h, u):
        raise NotHomogeneous("element is not homogeneous")
    rank = _ambient_rank(u, rank)
    d = degree(h, u)
    columns = [w for w in all_words(rank, L) if word_degree(h, w) == d]
    return _commutant(u, columns)


def cyclic_support(u: Element) -> Word | None:
    """Generator of the largest cyclic subgroup containing the support, if any.

    Of ``g`` and ``g^-1`` the shortlex-smaller one is returned.
    """
    _require_nonscalar(u)
    words = [w for w in u.support() if not w.is_identity()]
    root, _ = primitive_root(words[0])
    allowed = {root, root.inverse()}
    for w in words[1:]:
        if primitive_root(w)[0] not in allowed:
            return None
    return min(allowed)


def in_cyclic_group(w: Word, g: Word) -> bool:
    return w.is_identity() or primitive_root(w)[0] in (g, g.inverse())


def supporting_group(u: Element, L: int, rank: int | None = None,
                     basis: CentralizerBasis | None = None) -> FoldedGraph:
    """Fold the supports of ``u`` and of its bounded centralizer.

    This approximates the centralizer-supporting group from below; it is
    exact once ``L`` is large enough, which is not certified.
    """
    if basis is None:
        basis = centralizer_basis(u, L, rank)
    gens = set(u.support())
    for b in basis:
        gens.update(b.support())
    return fold(sorted(gens))


# -- degree conditions ------------------------------------------------------

@dataclass(frozen=True)
class RamifiedPair:
    """``degree(basis[j] - lam * basis[i]) < degree(basis[i])``."""

    i: int
    j: int
    lam: Fraction
    drop_to: object


@dataclass(frozen=True)
class DegreeConditionReport:
    degrees: tuple[Fraction, ...]
    generator: Fraction | None
    is_discrete: bool
    is_nonnegative: bool
    ramified_pairs: tuple[RamifiedPair, ...]
    vanishing: bool = False


def _rational_gcd(values: Sequence[Fraction]) -> Fraction | None:
    values = [abs(v) for v in values if v]
    if not values:
        return None
    den = lcm(*(v.denominator for v in values))
    g = 0
    for v in values:
        g = gcd(g, int(v * den))
    return Fraction(g, den)


def _proportional(x: Element, y: Element) -> Fraction | None:
    """``lam`` with ``x == lam * y``, else ``None``."""
    if set(x.support()) != set(y.support()):
        return None
    w = x.support()[0]
    lam = x.coeff(w) / y.coeff(w)
    return lam if x == y.scale(lam) else None


def check_degree_conditions(B: CentralizerBasis | Sequence[Element], h: Weighting) -> DegreeConditionReport:
    """Check that ``h`` restricts to a discrete degree function with the
    equal-degree cancellation property on the span of ``B``.

    For every pair of basis elements of equal degree the leading components
    must be proportional; the ratio is recorded as the witness.
    """
    basis = list(B.basis if isinstance(B, CentralizerBasis) else B)
    degrees = [degree(h, b) for b in basis]
    vanishing = all(d == 0 for d in degrees)
    pairs = []
    for i in range(len(basis)):
        for j in range(i + 1, len(basis)):
            if degrees[i] != degrees[j]:
                continue
            lam = _proportional(leading(h, basis[j]), leading(h, basis[i]))
            if lam is None:
                if vanishing:
                    raise VanishingWeighting("weighting vanishes on the whole basis")
                raise ProportionalityFailure(
                    f"basis elements {i} and {j} share degree {degrees[i]} "
                    "but have non-proportional leading components"
                )
            drop = degree(h, basis[j] - basis[i].scale(lam))
            assert drop < degrees[i]
            pairs.append(RamifiedPair(i, j, lam, drop))
    g = _rational_gcd(degrees)
    discrete = g is None or all((d / g).denominator == 1 for d in degrees)
    return DegreeConditionReport(
        degrees=tuple(degrees),
        generator=g,
        is_discrete=discrete,
        is_nonnegative=all(d >= 0 for d in degrees),
        ramified_pairs=tuple(pairs),
        vanishing=vanishing,
    )


def degree_echelon(basis: Sequence[Element], h: Weighting) -> list[Element]:
    """Basis of the same span whose elements have pairwise distinct pivots
    under the column order (degree descending, then shortlex).

    The degree of each returned element is the degree of its pivot word, so
    the set of degrees attained on the span is read off directly.  Sorted
    by ascending degree.
    """
    words = sorted({w for b in basis for w in b.support()},
                   key=lambda w: (-word_degree(h, w), w.sort_key()))
    index = {w: i for i, w in enumerate(words)}
    reduced = linalg.row_reduce(_to_vector(b, index) for b in basis)
    elems = [_from_vector(r, words) for r in reduced]
    return sorted(elems, key=lambda e: (degree(h, e), e.support()[0].sort_key()))


def module_basis(B: CentralizerBasis | Sequence[Element], h: Weighting, x: Element) -> list[Element | None]:
    """Generators of the span of ``B`` as a module over ``Q[x]``.

    One element of least degree per class of degrees modulo ``n = h(x)``;
    classes run over multiples of the degree-group generator, and a class
    with no element inside the bound is ``None``.
    """
    basis = list(B.basis if isinstance(B, CentralizerBasis) else B)
    words = sorted({w for b in list(basis) + [x] for w in b.support()}, key=Word.sort_key)
    index = {w: i for i, w in enumerate(words)}
    if linalg.express(_to_vector(x, index), [_to_vector(b, index) for b in basis]) is None:
        raise NotInBasisSpan("x is not in the span of the basis")
    n = degree(h, x)
    if n <= 0:
        raise NonpositiveDegree(f"h(x) = {n} is not positive")
    echelon = degree_echelon(basis, h)
    degs = [degree(h, e) for e in echelon]
    if any(d < 0 for d in degs):
        raise NonpositiveDegree("basis has elements of negative degree")
    g = _rational_gcd(degs + [n])
    classes = int(n / g)
    out: list[Element | None] = [None] * classes
    for e, d in zip(echelon, degs):
        k = int((d % n) / g)
        if out[k] is None:
            out[k] = e
    return out


# -- end-to-end analysis ----------------------------------------------------

class Case(enum.Enum):
    SCALAR = "Scalar"
    LAURENT = "LaurentCase"
    CURVE = "CurveCase"


@dataclass
class StructureReport:
    case: Case
    element: Element
    bound: int | None = None
    root: Word | None = None
    laurent_verified: bool | None = None
    weighting: Weighting | None = None
    centralizer: CentralizerBasis | None = None
    subgroup_basis: list[Word] | None = None
    rewritten: Element | None = None
    degree_report: DegreeConditionReport | None = None
    poly_generator: Element | None = None
    poly_status: str | None = None
    diagnostics: list[str] = field(default_factory=list)

    def to_json(self) -> dict:
        dr = self.degree_report
        return {
            "case": self.case.value,
            "element": str(self.element),
            "bound": self.bound,
            "root": None if self.root is None else str(self.root),
            "laurentVerified": self.laurent_verified,
            "weights": None if self.weighting is None else [str(w) for w in self.weighting.weights],
            "weightsOn": None if self.weighting is None else ("H" if self.subgroup_basis else "F"),
            "subgroupBasis": None if self.subgroup_basis is None else [str(w) for w in self.subgroup_basis],
            "rewritten": None if self.rewritten is None else str(self.rewritten),
            "basisDim": None if self.centralizer is None else self.centralizer.dim,
            "basis": None if self.centralizer is None else [str(b) for b in self.centralizer],
            "degrees": None if dr is None else [str(d) for d in dr.degrees],
            "discrete": None if dr is None else dr.is_discrete,
            "nonnegative": None if dr is None else dr.is_nonnegative,
            "ramifiedPairs": None if dr is None else [[p.i, p.j, str(p.lam)] for p in dr.ramified_pairs],
            "polyGenerator": None if self.poly_generator is None else str(self.poly_generator),
            "polyStatus": self.poly_status,
            "diagnostics": list(self.diagnostics),
        }


def _rewrite_element(u: Element, graph: FoldedGraph) -> Element:
    return Element((graph.rewrite(w), c) for w, c in u.terms())


def detect_polynomial_generator(basis: Sequence[Element], h: Weighting) -> Element | None:
    """Least positive-degree element ``t`` if the span lies in ``Q[t]``, else ``None``.

    Only powers ``t^k`` with ``k * h(t)`` up to the largest basis degree are
    tried, so ``None`` means undetermined rather than refuted.
    """
    echelon = degree_echelon(basis, h)
    positive = [e for e in echelon if degree(h, e) > 0]
    if not positive:
        return None
    t = positive[0]
    top = max(degree(h, e) for e in echelon)
    powers = [ONE_ELEMENT]
    for _ in range(floor(top / degree(h, t))):
        powers.append(powers[-1] * t)
    words = sorted({w for e in list(basis) + powers for w in e.support()}, key=Word.sort_key)
    index = {w: i for i, w in enumerate(words)}
    pvecs = [_to_vector(p, index) for p in powers]
    if all(linalg.in_span(_to_vector(b, index), pvecs) for b in basis):
        return t
    return None


def analyze(u: Element, L: int, rank: int | None = None, weighting: Weighting | None = None) -> StructureReport:
    """Classify the centralizer of ``u`` within the length bound ``L``.

    Scalars are reported as such.  Cyclically supported elements are the
    Laurent case, checked by confirming every bounded centralizer element
    lives on the same cyclic group.  Otherwise a grading is built (after
    passing to the supporting group's free basis when the support is too
    thin in the abelianization), the degree conditions are checked on the
    bounded centralizer, and a polynomial generator is searched for.
    """
    if u.is_scalar():
        return StructureReport(Case.SCALAR, u)
    rank = _ambient_rank(u, rank)
    B = centralizer_basis(u, L, rank)
    report = StructureReport(Case.CURVE, u, bound=L, centralizer=B)

    g = cyclic_support(u)
    if g is not None:
        report.case = Case.LAURENT
        report.root = g
        report.laurent_verified = all(in_cyclic_group(w, g) for b in B for w in b.support())
        if weighting is not None:
            report.weighting = weighting
            try:
                report.degree_report = check_degree_conditions(B, weighting)
            except VanishingWeighting as exc:
                report.diagnostics.append(str(exc))
        return report

    work_u, work_basis, h_rank = u, list(B.basis), rank
    if support_rank(u, rank) < 2:
        graph = supporting_group(u, L, rank, basis=B)
        sub_basis = graph.basis()
        report.subgroup_basis = sub_basis
        work_u = _rewrite_element(u, graph)
        work_basis = [_rewrite_element(b, graph) for b in B]
        h_rank = len(sub_basis)
        report.rewritten = work_u
        report.diagnostics.append(f"rewrote in supporting group of rank {h_rank}")
    if weighting is not None and weighting.rank != h_rank:
        raise DimensionMismatch(
            f"weighting has {weighting.rank} weights but the grading lives on a free group of rank {h_rank}")
    if weighting is None:
        if support_rank(work_u, max(h_rank, 1)) < 2:
            report.diagnostics.append("support rank < 2 even in the supporting group; no grading built")
            return report
        weighting = construct_weighting(work_u, h_rank)
    report.weighting = weighting
    try:
        report.degree_report = check_degree_conditions(work_basis, weighting)
    except VanishingWeighting as exc:
        report.diagnostics.append(str(exc))
        return report
    t = detect_polynomial_generator(work_basis, weighting)
    if t is None:
        report.poly_status = "undetermined"
    else:
        report.poly_status = "detected"
        report.poly_generator = substitute(t, report.subgroup_basis) if report.subgroup_basis else t
    return report
