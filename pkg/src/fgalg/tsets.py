"""Prefix-controlled homogeneous elements and their canonical factorizations.

For a weighting ``h`` and ``r > 0``:

* ``T1(r)``: homogeneous, degree at least ``2 (r + max_a |h(a)|)``;
* ``T2(r)``: homogeneous of positive degree ``D``, and every prefix ``p`` of
  every support word has ``-r < h(p) < D + r``;
* ``T(r) = T1(r) & T2(r)``;
* ``O``: words ``w`` with ``h(w) >= r`` whose proper prefixes all have
  ``|h(p)| < r``; ``Otilde`` is the same with suffixes.

Every word ``w`` in ``T`` factors without cancellation as ``w0 . w1 . w2``
with ``w0`` in ``O``, ``w2`` in ``Otilde`` and ``w1 != 1``; this module
computes that factorization, the finer split of the middle factor of a
product, and the groupings of element terms by middle factor.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import ceil, lcm
from typing import Union

from .algebra import Element
from .errors import NonpositiveDegree, NotHomogeneous, NotInT, SplitUnavailable, ZeroElement
from .grading import Weighting, degree, is_homogeneous
from .words import Word


@dataclass(frozen=True)
class TParams:
    r: Fraction
    h: Weighting
    # degrees scaled by a common denominator, so prefix scans use ints
    _scale: int = field(init=False, repr=False, compare=False)
    _steps: dict = field(init=False, repr=False, compare=False)
    _R: int = field(init=False, repr=False, compare=False)

    def __init__(self, r, h: Weighting):
        r = Fraction(r)
        if r <= 0:
            raise ValueError("r must be positive")
        object.__setattr__(self, "r", r)
        object.__setattr__(self, "h", h)
        scale = lcm(r.denominator, *(w.denominator for w in h.weights))
        steps = {}
        for i, w in enumerate(h.weights):
            steps[i + 1] = int(w * scale)
            steps[-(i + 1)] = -int(w * scale)
        object.__setattr__(self, "_scale", scale)
        object.__setattr__(self, "_steps", steps)
        object.__setattr__(self, "_R", int(r * scale))

    @property
    def t1_threshold(self) -> Fraction:
        return 2 * (self.r + self.h.max_abs())


@dataclass(frozen=True)
class Membership:
    in_O: bool
    in_Otilde: bool
    in_T1: bool
    in_T2: bool

    @property
    def in_T(self) -> bool:
        return self.in_T1 and self.in_T2

    def as_dict(self) -> dict[str, bool]:
        return {"in_O": self.in_O, "in_Otilde": self.in_Otilde,
                "in_T1": self.in_T1, "in_T2": self.in_T2, "in_T": self.in_T}


@dataclass(frozen=True)
class Factor3:
    w0: Word
    w1: Word
    w2: Word

    def __iter__(self):
        return iter((self.w0, self.w1, self.w2))


@dataclass(frozen=True)
class MiddleSplit:
    w10: Word
    w11: Word
    w12: Word

    def __iter__(self):
        return iter((self.w10, self.w11, self.w12))


def _scaled_prefix_degrees(params: TParams, letters) -> list[int]:
    """Degrees of all prefixes, multiplied by ``params._scale``."""
    steps = params._steps
    out = [0]
    acc = 0
    for x in letters:
        acc += steps[x]
        out.append(acc)
    return out


def _prefix_degrees(h: Weighting, w: Word) -> list[Fraction]:
    out = [Fraction(0)]
    for x in w:
        i = abs(x) - 1
        out.append(out[-1] + (h.weights[i] if x > 0 else -h.weights[i]))
    return out


def _first_exit(hs: list[int], R: int) -> bool:
    return hs[-1] >= R and all(-R < v < R for v in hs[:-1])


def in_O(w: Word, params: TParams) -> bool:
    return _first_exit(_scaled_prefix_degrees(params, w.letters), params._R)


def in_Otilde(w: Word, params: TParams) -> bool:
    return _first_exit(_scaled_prefix_degrees(params, reversed(w.letters)), params._R)


def _word_in_T2(hs: list[int], R: int) -> bool:
    top = hs[-1] + R
    return all(-R < v < top for v in hs)


def membership(x: Union[Word, Element], params: TParams) -> Membership:
    """Report membership of a word or element in O, Otilde, T1, T2 (and T).

    ``in_O`` / ``in_Otilde`` are only true for a monomial whose word lies
    in the set, since both are sets of group elements.
    """
    if isinstance(x, Element):
        if x.is_zero():
            raise ZeroElement("membership of zero is undefined")
        words = x.support()
    else:
        words = [x]
    R = params._R
    word_O = word_Ot = False
    if len(words) == 1:
        word_O, word_Ot = in_O(words[0], params), in_Otilde(words[0], params)
    scans = [_scaled_prefix_degrees(params, w.letters) for w in words]
    d = scans[0][-1]
    if any(hs[-1] != d for hs in scans):
        return Membership(word_O, word_Ot, False, False)
    t1 = d >= 2 * (R + max(abs(v) for v in params._steps.values()))
    t2 = d > 0 and all(_word_in_T2(hs, R) for hs in scans)
    return Membership(word_O, word_Ot, t1, t2)


def in_T(x: Union[Word, Element], params: TParams) -> bool:
    return membership(x, params).in_T


def factorize3(w: Word, params: TParams) -> Factor3:
    """Canonical reduced factorization ``w = w0 . w1 . w2`` of a word in ``T``.

    ``w0`` is the shortest prefix with ``h >= r``, ``w2`` the shortest
    suffix with ``h >= r``.
    """
    if not membership(w, params).in_T:
        raise NotInT(f"{w} is not in T(r)")
    r = params._R
    hs = _scaled_prefix_degrees(params, w.letters)
    i = next(k for k in range(1, len(hs)) if hs[k] >= r)
    total = hs[-1]
    # suffix of length k has degree total - hs[n - k]
    n = len(w)
    j = next(k for k in range(1, n + 1) if total - hs[n - k] >= r)
    w0, w2 = w.prefix(i), w.suffix(j)
    assert i + j < n, "T1 guarantees a nonempty middle factor"
    return Factor3(w0, Word._trusted(w.letters[i:n - j]), w2)


def middle_split(w: Word, ell, params: TParams) -> MiddleSplit:
    """Split the middle factor of ``w = u v`` (``u, v`` in ``T``, ``h(u) = ell``).

    Works from ``w`` and ``ell`` alone: ``p`` is the longest prefix with
    ``h(p) <= ell - r`` and ``q`` the shortest with ``h(q) >= ell + r``.
    """
    ell = Fraction(ell)
    f = factorize3(w, params)
    lo, hi = (ell - params.r) * params._scale, (ell + params.r) * params._scale
    hs = _scaled_prefix_degrees(params, w.letters)
    lows = [k for k, v in enumerate(hs) if v <= lo]
    highs = [k for k, v in enumerate(hs) if v >= hi]
    window = f"({ell - params.r}, {ell + params.r})"
    if not lows or not highs:
        raise SplitUnavailable(f"no crossing of {window} in {w}")
    pk, qk = max(lows), min(highs)
    if not (len(f.w0) < pk < qk < len(w) - len(f.w2)):
        raise SplitUnavailable(f"{w} does not cross {window} inside its middle factor")
    x = w.letters
    return MiddleSplit(
        Word._trusted(x[len(f.w0):pk]),
        Word._trusted(x[pk:qk]),
        Word._trusted(x[qk:len(x) - len(f.w2)]),
    )


def split_by_middle(u: Element, params: TParams) -> dict[Word, Element]:
    """Group the terms of ``u`` in ``T`` by the middle factor of each support word."""
    if not membership(u, params).in_T:
        raise NotInT("element is not in T(r)")
    parts: dict[Word, dict[Word, Fraction]] = {}
    for w, c in u.terms():
        parts.setdefault(factorize3(w, params).w1, {})[w] = c
    return {k: Element(parts[k]) for k in sorted(parts, key=Word.sort_key)}


def split_by_outer_middles(w: Element, ell, params: TParams) -> dict[tuple[Word, Word], Element]:
    """Group the terms of ``w`` by ``(w10, w12)`` from :func:`middle_split`.

    For ``w = u v`` with ``u, v`` in ``T`` and ``h(u) = ell`` the part keyed
    ``(a, b)`` equals ``split_by_middle(u)[a] * split_by_middle(v)[b]``.
    """
    parts: dict[tuple[Word, Word], dict[Word, Fraction]] = {}
    for x, c in w.terms():
        s = middle_split(x, ell, params)
        parts.setdefault((s.w10, s.w12), {})[x] = c
    return {k: Element(v) for k, v in sorted(parts.items(), key=lambda kv: (kv[0][0].sort_key(), kv[0][1].sort_key()))}


def find_admissible_params(u: Element, h: Weighting) -> tuple[Fraction, int]:
    """Return ``(r, n)`` with ``u`` in ``T2(r)`` and ``u**n`` in ``T(r)``.

    ``r`` exceeds every prefix excursion of the support by 1; ``n`` is the
    least power reaching the ``T1`` threshold.
    """
    if u.is_zero():
        raise ZeroElement("zero has no admissible parameters")
    if not is_homogeneous(h, u):
        raise NotHomogeneous("element is not homogeneous")
    d = degree(h, u)
    if d <= 0:
        raise NonpositiveDegree(f"degree {d} is not positive")
    excursion = Fraction(0)
    for w in u.support():
        for v in _prefix_degrees(h, w):
            excursion = max(excursion, -v, v - d)
    r = excursion + 1
    n = max(1, ceil(2 * (r + h.max_abs()) / d))
    return r, n
