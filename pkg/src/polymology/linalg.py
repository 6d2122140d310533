"""Exact linear algebra over Q (and cofactor determinants over polynomial rings)."""
from __future__ import annotations

from fractions import Fraction
from itertools import combinations
from math import lcm
from typing import Dict, Hashable, Iterable, List, Sequence

Matrix = List[List[Fraction]]


def to_matrix(rows: Iterable[Iterable]) -> Matrix:
    m = [[Fraction(x) for x in row] for row in rows]
    if m and any(len(r) != len(m[0]) for r in m):
        raise ValueError("ragged matrix")
    return m


def identity(n: int) -> Matrix:
    return [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]


def matmul(a: Matrix, b: Matrix) -> Matrix:
    bt = list(zip(*b))
    return [[sum((x * y for x, y in zip(row, col)), Fraction(0)) for col in bt] for row in a]


def _integer_rows(m: Sequence[Sequence[Fraction]]) -> tuple[list[list[int]], Fraction]:
    """Scale each row to integers; return the rows and the product of the scale factors."""
    rows, scale = [], Fraction(1)
    for row in m:
        d = lcm(*(Fraction(x).denominator for x in row)) if row else 1
        rows.append([int(Fraction(x) * d) for x in row])
        scale *= d
    return rows, scale


def bareiss_det(m: Sequence[Sequence[int]]) -> int:
    """Determinant of a square integer matrix by fraction-free Bareiss elimination."""
    a = [list(r) for r in m]
    n = len(a)
    if any(len(r) != n for r in a):
        raise ValueError("matrix is not square")
    if n == 0:
        return 1
    sign, prev = 1, 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = a[k][k]
        for i in range(k + 1, n):
            aik = a[i][k]
            row_i, row_k = a[i], a[k]
            for j in range(k + 1, n):
                row_i[j] = (row_i[j] * pivot - aik * row_k[j]) // prev
            row_i[k] = 0
        prev = pivot
    return sign * a[n - 1][n - 1]


def det(m: Sequence[Sequence]) -> Fraction:
    """Exact determinant of a rational matrix (rows scaled to integers, then Bareiss)."""
    rows, scale = _integer_rows(m)
    return Fraction(bareiss_det(rows)) / scale


def rank(m: Sequence[Sequence]) -> int:
    """Rank over Q via fraction-free row reduction."""
    rows, _ = _integer_rows(m)
    if not rows:
        return 0
    ncols = len(rows[0])
    r, prev = 0, 1
    for c in range(ncols):
        piv = next((i for i in range(r, len(rows)) if rows[i][c] != 0), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        p = rows[r][c]
        for i in range(r + 1, len(rows)):
            f = rows[i][c]
            # entries stay minors of the input, so the division is exact
            rows[i] = [(x * p - f * y) // prev for x, y in zip(rows[i], rows[r])]
        prev = p
        r += 1
        if r == len(rows):
            break
    return r


def inverse(m: Sequence[Sequence]) -> Matrix:
    """Gauss-Jordan inverse; raises ValueError when singular."""
    n = len(m)
    a = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)]
         for i, row in enumerate(m)]
    for c in range(n):
        piv = next((i for i in range(c, n) if a[i][c] != 0), None)
        if piv is None:
            raise ValueError("matrix is singular")
        a[c], a[piv] = a[piv], a[c]
        p = a[c][c]
        a[c] = [x / p for x in a[c]]
        for i in range(n):
            if i != c and a[i][c] != 0:
                f = a[i][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[c])]
    return [row[n:] for row in a]


def cofactor_det(m: Sequence[Sequence]):
    """Determinant by Laplace expansion along the first row.

    Works over any commutative ring whose elements support ``+``, ``-`` and
    ``*`` (Fractions, :class:`~polymology.coeffs.Poly`, ...).  Exponential
    cost, so intended for matrices up to about 6x6.
    """
    n = len(m)
    if n == 0:
        return Fraction(1)
    if n == 1:
        return m[0][0]
    total = None
    for j in range(n):
        entry = m[0][j]
        if not entry:
            continue
        minor = [row[:j] + row[j + 1:] for row in m[1:]]
        term = entry * cofactor_det(minor)
        if j % 2:
            term = -term
        total = term if total is None else total + term
    return Fraction(0) if total is None else total


def maximal_minors(m: Sequence[Sequence]) -> list:
    """All ``r x r`` minors of an ``r x c`` matrix with ``r <= c`` (column subsets in lex order)."""
    r = len(m)
    if r == 0:
        return []
    c = len(m[0])
    if r > c:
        raise ValueError("more rows than columns")
    return [cofactor_det([[row[j] for j in cols] for row in m])
            for cols in combinations(range(c), r)]


class Echelon:
    """Incrementally maintained reduced row-echelon basis over Q.

    Vectors are sparse dicts ``column -> Fraction``.  Columns are compared by
    their position in ``order`` (the first listed column is the most preferred
    pivot), so the reduced form is fixed by that order alone.
    """

    def __init__(self, order: Sequence[Hashable]):
        self.order = list(order)
        self.position = {c: i for i, c in enumerate(self.order)}
        if len(self.position) != len(self.order):
            raise ValueError("duplicate columns")
        self.rows: Dict[Hashable, Dict[Hashable, Fraction]] = {}

    @property
    def rank(self) -> int:
        return len(self.rows)

    @property
    def pivots(self) -> list:
        return sorted(self.rows, key=self.position.__getitem__)

    def reduce(self, vec: Dict[Hashable, Fraction]) -> Dict[Hashable, Fraction]:
        out = {c: Fraction(v) for c, v in vec.items() if v}
        for c in list(out):
            if c not in self.position:
                raise KeyError(f"column {c!r} outside the ambient basis")
        for pc, row in self.rows.items():
            f = out.get(pc)
            if f:
                for c, v in row.items():
                    s = out.get(c, 0) - f * v
                    if s:
                        out[c] = s
                    else:
                        out.pop(c, None)
        return out

    def add(self, vec: Dict[Hashable, Fraction]) -> bool:
        """Insert a vector; return True if it enlarged the span."""
        red = self.reduce(vec)
        if not red:
            return False
        pc = min(red, key=self.position.__getitem__)
        p = red[pc]
        red = {c: v / p for c, v in red.items()}
        for row in self.rows.values():
            f = row.get(pc)
            if f:
                for c, v in red.items():
                    s = row.get(c, 0) - f * v
                    if s:
                        row[c] = s
                    else:
                        row.pop(c, None)
        self.rows[pc] = red
        return True
