"""Tensors in U (x) V over word spans, and the star-commutation test.

For ``s, t`` in ``U (x) V`` the star product multiplies the inner factors
in Q[F]::

    (x (x) y) * (z (x) w) = x (x) (y z) (x) w

When ``mu`` (multiplication ``V x U -> Z``) has no zero divisors, tensors
that star-commute are linearly dependent.  :func:`lemma_check` tests that
conclusion on concrete instances.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from . import linalg
from .algebra import Element
from .errors import DimensionMismatch
from .words import Word


@dataclass(frozen=True)
class TensorElement:
    """``sum_ij matrix[i][j] * u_basis[i] (x) v_basis[j]``."""

    matrix: tuple[tuple[Fraction, ...], ...]
    u_basis: tuple[Element, ...]
    v_basis: tuple[Element, ...]

    def __init__(self, matrix: Sequence[Sequence[object]], u_basis: Sequence[Element], v_basis: Sequence[Element]):
        m = tuple(tuple(Fraction(x) for x in row) for row in matrix)
        if len(m) != len(u_basis) or any(len(row) != len(v_basis) for row in m):
            raise DimensionMismatch(f"matrix shape does not match bases {len(u_basis)}x{len(v_basis)}")
        object.__setattr__(self, "matrix", m)
        object.__setattr__(self, "u_basis", tuple(u_basis))
        object.__setattr__(self, "v_basis", tuple(v_basis))

    @classmethod
    def simple(cls, i: int, j: int, u_basis, v_basis, coeff=1) -> "TensorElement":
        m = [[0] * len(v_basis) for _ in u_basis]
        m[i][j] = coeff
        return cls(m, u_basis, v_basis)

    def is_zero(self) -> bool:
        return all(x == 0 for row in self.matrix for x in row)

    def __add__(self, other: "TensorElement") -> "TensorElement":
        _same_spaces(self, other)
        return TensorElement([[a + b for a, b in zip(r1, r2)] for r1, r2 in zip(self.matrix, other.matrix)],
                             self.u_basis, self.v_basis)

    def scale(self, c) -> "TensorElement":
        c = Fraction(c)
        return TensorElement([[c * x for x in row] for row in self.matrix], self.u_basis, self.v_basis)


@dataclass(frozen=True)
class TensorSpaces:
    rank: int
    u_space: list[list[Fraction]]
    v_space: list[list[Fraction]]


def tensor_spaces(s: TensorElement) -> TensorSpaces:
    """Tensor rank of ``s`` and bases of the minimal subspaces ``U_s``, ``V_s``.

    Vectors are coordinates in ``u_basis`` / ``v_basis``.
    """
    nu, nv = len(s.u_basis), len(s.v_basis)
    rows = linalg.row_reduce(linalg.dense_rows(s.matrix))
    cols = linalg.row_reduce(linalg.dense_rows(linalg.transpose(s.matrix)))
    assert len(rows) == len(cols)
    return TensorSpaces(len(rows), linalg.to_dense(cols, nu), linalg.to_dense(rows, nv))


def _same_spaces(s: TensorElement, t: TensorElement) -> None:
    if s.u_basis != t.u_basis or s.v_basis != t.v_basis:
        raise DimensionMismatch("tensors live in different spaces")


def star(s: TensorElement, t: TensorElement) -> dict[tuple[int, Word, int], Fraction]:
    """Coordinates of ``s * t`` in ``U (x) Z (x) V``, with ``Z`` in the word basis."""
    _same_spaces(s, t)
    prods = [[v * u for u in s.u_basis] for v in s.v_basis]
    out: dict[tuple[int, Word, int], Fraction] = {}
    for i, srow in enumerate(s.matrix):
        for j, sij in enumerate(srow):
            if not sij:
                continue
            for k, trow in enumerate(t.matrix):
                p = prods[j][k]
                for l, tkl in enumerate(trow):
                    if not tkl:
                        continue
                    c = sij * tkl
                    for w, pc in p.terms():
                        key = (i, w, l)
                        nv = out.get(key, 0) + c * pc
                        if nv:
                            out[key] = nv
                        else:
                            del out[key]
    return out


class Verdict(enum.Enum):
    DEPENDENT = "Dependent"
    NOT_STAR_COMMUTING = "NotStarCommuting"
    ZERO_DIVISOR_IN_MU = "ZeroDivisorInMu"


@dataclass(frozen=True)
class LemmaResult:
    """``lam`` satisfies ``s == lam * t`` when ``t != 0``; otherwise ``t == 0 * s``."""

    verdict: Verdict
    lam: Fraction | None = None


def _ratio(s: TensorElement, t: TensorElement) -> Fraction | None:
    pivot = next((i, j) for i, row in enumerate(t.matrix) for j, x in enumerate(row) if x)
    lam = s.matrix[pivot[0]][pivot[1]] / t.matrix[pivot[0]][pivot[1]]
    return lam if s == t.scale(lam) else None


def lemma_check(s: TensorElement, t: TensorElement) -> LemmaResult:
    """Star-commutation and, if it holds, the dependence witness.

    Star-commuting but independent tensors can only occur when ``mu`` has
    zero divisors; that outcome is reported as ``ZERO_DIVISOR_IN_MU``.
    """
    if star(s, t) != star(t, s):
        return LemmaResult(Verdict.NOT_STAR_COMMUTING)
    if t.is_zero():
        return LemmaResult(Verdict.DEPENDENT, Fraction(0))
    lam = _ratio(s, t)
    if lam is None:
        return LemmaResult(Verdict.ZERO_DIVISOR_IN_MU)
    return LemmaResult(Verdict.DEPENDENT, lam)
