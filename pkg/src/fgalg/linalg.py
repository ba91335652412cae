"""Exact linear algebra over Q on sparse rows.

Rows are ``dict[int, number]`` mapping column index to a nonzero entry.
Elimination runs fraction-free on primitive integer rows; only the final
reduced rows are converted back to ``Fraction`` with unit pivots.  Column
order is the integer order, so callers control pivoting by how they number
columns.
"""
from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm
from typing import Iterable, Mapping, Sequence

Row = dict


def _primitive(row: Mapping[int, object]) -> dict[int, int]:
    """Scale a rational row to coprime integers with a positive leading entry."""
    items = [(c, Fraction(v)) for c, v in row.items() if v != 0]
    if not items:
        return {}
    den = lcm(*(v.denominator for _, v in items))
    ints = {c: int(v * den) for c, v in items}
    g = 0
    for v in ints.values():
        g = gcd(g, v)
    lead = ints[min(ints)]
    if lead < 0:
        g = -g
    return {c: v // g for c, v in ints.items()}


def _eliminate(row: dict[int, int], piv: dict[int, int], col: int) -> dict[int, int]:
    p, q = piv[col], row[col]
    g = gcd(p, q)
    p, q = p // g, q // g
    out = {c: p * v for c, v in row.items()}
    for c, v in piv.items():
        nv = out.get(c, 0) - q * v
        if nv:
            out[c] = nv
        else:
            out.pop(c, None)
    return _primitive(out)


def _echelon(rows: Iterable[Mapping[int, object]]) -> dict[int, dict[int, int]]:
    pivots: dict[int, dict[int, int]] = {}
    for raw in rows:
        row = _primitive(raw)
        while row:
            c = min(row)
            if c in pivots:
                row = _eliminate(row, pivots[c], c)
            else:
                pivots[c] = row
                break
    return pivots


def row_reduce(rows: Iterable[Mapping[int, object]]) -> list[dict[int, Fraction]]:
    """Reduced row echelon form, rows sorted by pivot column, pivots equal to 1."""
    pivots = _echelon(rows)
    order = sorted(pivots)
    for c in reversed(order):
        pc = pivots[c]
        for c2 in order:
            if c2 >= c:
                break
            r = pivots[c2]
            if c in r:
                pivots[c2] = _eliminate(r, pc, c)
    out = []
    for c in order:
        r = pivots[c]
        lead = r[c]
        out.append({k: Fraction(v, lead) for k, v in sorted(r.items())})
    return out


def rank(rows: Iterable[Mapping[int, object]]) -> int:
    return len(_echelon(rows))


def nullspace(rows: Iterable[Mapping[int, object]], ncols: int) -> list[dict[int, Fraction]]:
    """Basis of ``{x : row . x = 0 for every row}`` on columns ``0..ncols-1``.

    One vector per free column ``f``, with entry 1 at ``f`` and zero at every
    other free column.
    """
    reduced = row_reduce(rows)
    pivot_cols = {min(r) for r in reduced}
    basis = []
    for f in range(ncols):
        if f in pivot_cols:
            continue
        vec = {f: Fraction(1)}
        for r in reduced:
            v = r.get(f)
            if v:
                vec[min(r)] = -v
        basis.append(dict(sorted(vec.items())))
    return basis


def express(vec: Mapping[int, object], vectors: Sequence[Mapping[int, object]]) -> list[Fraction] | None:
    """Coefficients ``x`` with ``sum x_i vectors_i == vec``, or ``None``.

    When the vectors are dependent any valid combination is returned.
    """
    cols = set(vec)
    for v in vectors:
        cols.update(v)
    offset = (max(cols) + 1) if cols else 0
    tagged = []
    for i, v in enumerate(vectors):
        row = {c: x for c, x in v.items() if x != 0}
        row[offset + i] = 1
        tagged.append(row)
    reduced = row_reduce(tagged)
    target: dict[int, Fraction] = {c: Fraction(x) for c, x in vec.items() if x != 0}
    for r in reduced:
        c = min(r)
        if c >= offset:
            break
        t = target.get(c)
        if t:
            for k, v in r.items():
                nv = target.get(k, 0) - t * v
                if nv:
                    target[k] = nv
                else:
                    target.pop(k, None)
    if any(c < offset for c in target):
        return None
    # target now equals -sum(coeff_i * tag_i)
    return [-target.get(offset + i, Fraction(0)) for i in range(len(vectors))]


def in_span(vec: Mapping[int, object], vectors: Sequence[Mapping[int, object]]) -> bool:
    return express(vec, vectors) is not None


def dense_rows(matrix: Sequence[Sequence[object]]) -> list[dict[int, object]]:
    return [{j: x for j, x in enumerate(row) if x != 0} for row in matrix]


def to_dense(rows: Iterable[Mapping[int, object]], ncols: int) -> list[list[Fraction]]:
    return [[Fraction(r.get(j, 0)) for j in range(ncols)] for r in rows]


def transpose(matrix: Sequence[Sequence[object]]) -> list[list[object]]:
    return [list(col) for col in zip(*matrix)] if matrix else []


def solve_unique(matrix: Sequence[Sequence[object]], rhs: Sequence[object]) -> list[Fraction] | None:
    """Solve a square or overdetermined system; ``None`` if inconsistent.

    Raises ``ValueError`` when the solution is not unique.
    """
    ncols = len(matrix[0]) if matrix else 0
    rows = []
    for r, b in zip(matrix, rhs):
        row = {j: x for j, x in enumerate(r) if x != 0}
        if b != 0:
            row[ncols] = b
        rows.append(row)
    reduced = row_reduce(rows)
    if any(min(r) == ncols for r in reduced):
        return None
    if len(reduced) < ncols:
        raise ValueError("system is underdetermined")
    return [reduced[j].get(ncols, Fraction(0)) for j in range(ncols)]
