"""Exact rank and determinant of integer matrices.

Elimination is fraction-free: a row is reduced against a pivot row by
``row <- p*row - a*pivot`` and then divided by the gcd of its entries, so all
intermediate values stay integral and small.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd, lcm
from typing import Iterable, Mapping, Sequence


@dataclass
class SparseIntMatrix:
    rows: int
    cols: int
    entries: dict[tuple[int, int], int] = field(default_factory=dict)

    def __post_init__(self):
        self.entries = {k: v for k, v in self.entries.items() if v != 0}
        for r, c in self.entries:
            if not (0 <= r < self.rows and 0 <= c < self.cols):
                raise ValueError(f"entry ({r}, {c}) outside a {self.rows}x{self.cols} matrix")

    @classmethod
    def from_dense(cls, rows: Sequence[Sequence[int]]) -> "SparseIntMatrix":
        n_cols = len(rows[0]) if rows else 0
        entries = {(i, j): v for i, row in enumerate(rows) for j, v in enumerate(row) if v}
        return cls(len(rows), n_cols, entries)

    @classmethod
    def identity(cls, n: int) -> "SparseIntMatrix":
        return cls(n, n, {(i, i): 1 for i in range(n)})

    def to_dense(self) -> list[list[int]]:
        out = [[0] * self.cols for _ in range(self.rows)]
        for (r, c), v in self.entries.items():
            out[r][c] = v
        return out

    def row_vectors(self) -> list[dict[int, int]]:
        vecs: dict[int, dict[int, int]] = {}
        for (r, c), v in self.entries.items():
            vecs.setdefault(r, {})[c] = v
        return list(vecs.values())

    def triples(self) -> list[tuple[int, int, int]]:
        return [(r, c, v) for (r, c), v in sorted(self.entries.items())]


def _primitive(row: dict[int, int]) -> dict[int, int]:
    g = 0
    for v in row.values():
        g = gcd(g, v)
        if g == 1:
            return row
    if g > 1:
        return {c: v // g for c, v in row.items()}
    return row


def _integral(vec: Mapping[int, object]) -> dict[int, int]:
    if all(isinstance(v, int) for v in vec.values()):
        return {c: v for c, v in vec.items() if v}
    fracs = {c: Fraction(v) for c, v in vec.items() if v}
    den = 1
    for f in fracs.values():
        den = lcm(den, f.denominator)
    return {c: int(f * den) for c, f in fracs.items()}


def rank_of_vectors(vectors: Iterable[Mapping[int, object]]) -> int:
    """Rank over the rationals of a family of sparse vectors ``{index: value}``.

    Sparse vectors are inserted first; a vector whose leading index is already
    pivoted is reduced against that pivot, and when its leading entry is
    smaller in magnitude it takes over as the pivot (partial pivoting on
    magnitude, which keeps multipliers small).
    """
    pivots: dict[int, dict[int, int]] = {}
    ordered = sorted((_integral(v) for v in vectors), key=len)
    for row in ordered:
        row = _primitive(row)
        while row:
            lead = min(row)
            piv = pivots.get(lead)
            if piv is None:
                pivots[lead] = row
                break
            if abs(row[lead]) < abs(piv[lead]):
                pivots[lead] = row
                row, piv = piv, row
            a, p = row[lead], piv[lead]
            g = gcd(a, p)
            mp, ma = p // g, a // g
            new = {c: v * mp for c, v in row.items()}
            for c, v in piv.items():
                w = new.get(c, 0) - v * ma
                if w:
                    new[c] = w
                else:
                    new.pop(c, None)
            row = _primitive(new)
    return len(pivots)


def rank(m: SparseIntMatrix) -> int:
    return rank_of_vectors(m.row_vectors())


def determinant(m: SparseIntMatrix) -> int:
    """Bareiss fraction-free determinant (dense; meant for small matrices)."""
    if m.rows != m.cols:
        raise ValueError("determinant of a non-square matrix")
    n = m.rows
    a = m.to_dense()
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if a[i][k] != 0), None)
            if swap is None:
                return 0
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[n - 1][n - 1] if n else 1
