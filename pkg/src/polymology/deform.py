"""The deformation matrix B: invariants, degenerate locus, symmetries.

Matrices act on column vectors, so ``B e_i`` is the i-th column of ``B``.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Sequence, Tuple

from . import linalg
from .coeffs import format_rational, parse_rational


@dataclass(frozen=True)
class BMatrix:
    entries: Tuple[Tuple[Fraction, ...], ...]

    def __post_init__(self):
        rows = tuple(tuple(Fraction(x) for x in row) for row in self.entries)
        if any(len(r) != len(rows) for r in rows):
            raise ValueError("B must be square")
        object.__setattr__(self, "entries", rows)

    @property
    def n(self) -> int:
        return len(self.entries)

    @classmethod
    def zero(cls, n: int) -> "BMatrix":
        return cls(tuple((0,) * n for _ in range(n)))

    @classmethod
    def scalar(cls, n: int, eps) -> "BMatrix":
        eps = Fraction(eps)
        return cls(tuple(tuple(eps if i == j else 0 for j in range(n)) for i in range(n)))

    @classmethod
    def diag(cls, values: Sequence) -> "BMatrix":
        n = len(values)
        return cls(tuple(tuple(values[i] if i == j else 0 for j in range(n)) for i in range(n)))

    def rows(self) -> list[list[Fraction]]:
        return [list(r) for r in self.entries]

    def trace(self) -> Fraction:
        return sum((self.entries[i][i] for i in range(self.n)), Fraction(0))

    def to_json(self) -> dict:
        return {"n": self.n, "entries": [[format_rational(x) for x in row] for row in self.entries]}

    @classmethod
    def from_json(cls, data: dict) -> "BMatrix":
        b = cls(tuple(tuple(parse_rational(x) for x in row) for row in data["entries"]))
        if "n" in data and int(data["n"]) != b.n:
            raise ValueError(f"declared n={data['n']} but matrix is {b.n}x{b.n}")
        return b


def char_invariants(B: BMatrix) -> tuple[Fraction, ...]:
    """``(I_0, ..., I_n)`` with ``det(t I + B) = sum_i I_i t^(n-i)``.

    Faddeev-LeVerrier recursion applied to ``-B``.
    """
    n = B.n
    A = [[-x for x in row] for row in B.entries]
    coeffs = [Fraction(1)]
    M = [[Fraction(0)] * n for _ in range(n)]
    for k in range(1, n + 1):
        # M_k = A M_{k-1} + c_{k-1} I ;  c_k = -tr(A M_k) / k
        M = linalg.matmul(A, M)
        for i in range(n):
            M[i][i] += coeffs[-1]
        AM = linalg.matmul(A, M)
        coeffs.append(-sum((AM[i][i] for i in range(n)), Fraction(0)) / k)
    return tuple(coeffs)


def wedge_basis(n: int, k: int) -> list[tuple[int, ...]]:
    return list(combinations(range(n), k))


def induced_wedge_operator(B: BMatrix, k: int) -> list[list[Fraction]]:
    """Matrix of ``Id + D_B`` on the k-th exterior power, lexicographic basis.

    ``D_B`` applies B to one slot of ``e_{i_1} ^ ... ^ e_{i_k}`` and sums over the
    slots.
    """
    n = B.n
    if not 1 <= k <= n:
        raise ValueError(f"k={k} out of range 1..{n}")
    basis = wedge_basis(n, k)
    index = {S: i for i, S in enumerate(basis)}
    N = len(basis)
    out = [[Fraction(int(i == j)) for j in range(N)] for i in range(N)]
    for col, S in enumerate(basis):
        members = set(S)
        for i in S:
            others = members - {i}
            for l in range(n):
                b = B.entries[l][i]
                if not b or l in others:
                    continue
                T = tuple(sorted(others | {l}))
                lo, hi = min(i, l), max(i, l)
                # moving l into sorted position passes the entries strictly between
                sign = -1 if sum(1 for x in others if lo < x < hi) % 2 else 1
                out[index[T]][col] += sign * b
    return out


@dataclass(frozen=True)
class Degeneracy:
    degenerate: bool
    determinant: Fraction

    def to_json(self) -> dict:
        return {"degenerate": self.degenerate, "determinant": format_rational(self.determinant)}


def is_degenerate(B: BMatrix, k: int) -> Degeneracy:
    """Whether B lies on the degenerate locus for G(k, n), decided by the
    exact determinant of the induced operator on the k-th exterior power."""
    d = linalg.det(induced_wedge_operator(B, k))
    return Degeneracy(d == 0, d)


class TransformError(ValueError):
    pass


def et_transform(B: BMatrix, k: int, eps) -> BMatrix:
    """``(1 + k eps) B + eps I``, which gives an isomorphic deformation."""
    eps = Fraction(eps)
    scale = 1 + k * eps
    if scale == 0:
        raise TransformError(f"eps-transformation undefined: 1 + k*eps = 0 for k={k}, eps={eps}")
    return BMatrix(tuple(tuple(scale * x + (eps if i == j else 0) for j, x in enumerate(row))
                         for i, row in enumerate(B.entries)))


def conjugate(B: BMatrix, g: BMatrix) -> BMatrix:
    """``g B g^{-1}``; a singular ``g`` is rejected."""
    if g.n != B.n:
        raise ValueError("size mismatch")
    if linalg.rank(g.rows()) < g.n:
        raise ValueError("g is singular")
    ginv = linalg.inverse(g.rows())
    return BMatrix(tuple(tuple(r) for r in linalg.matmul(linalg.matmul(g.rows(), B.rows()), ginv)))


def companion(invariants: Sequence) -> BMatrix:
    """A matrix whose characteristic invariants are ``invariants = (1, I_1, ..., I_n)``."""
    inv = [Fraction(x) for x in invariants]
    if not inv or inv[0] != 1:
        raise ValueError("I_0 must be 1")
    n = len(inv) - 1
    # -B is the companion matrix of t^n + I_1 t^(n-1) + ... + I_n
    rows = [[Fraction(0)] * n for _ in range(n)]
    for i in range(1, n):
        rows[i][i - 1] = Fraction(-1)
    for i in range(n):
        rows[i][n - 1] = inv[n - i]
    return BMatrix(tuple(tuple(r) for r in rows))
