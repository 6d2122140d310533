"""The classical polymology ring of G(k, n) for a deformation with invariants I.

The ring is modelled as symmetric polynomials in ``k`` variables (so the
classes ``D_{k+1}, D_{k+2}, ...`` vanish automatically) modulo the ideal
generated by the deformed relations

    kt_(r) = sum_{i=0}^{min(r, n)} I_i k_(r-i) k_(1)^i,    r >= n-k+1.

All questions are asked one degree at a time: the degree-s piece of the ideal
is spanned by ``kt_(r) k_mu`` with ``|mu| = s - r``, and the quotient is
handled by exact row reduction of that span.
"""
from __future__ import annotations

import os
import random
import warnings
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from math import comb
from typing import Optional, Sequence

from . import linalg
from . import partition as P
from .bwb import StandingAssumptionWarning
from .coeffs import EPS, Coefficient, I as I_var, Poly, as_poly, simplify
from .deform import BMatrix, char_invariants, companion, is_degenerate
from .schur import SchurClass, determinant, power

EXACT_MINOR_LIMIT = 6


@dataclass(frozen=True)
class RingSpec:
    """G(k, n) together with the invariants ``(I_0, ..., I_n)``; ``None`` means symbolic."""

    k: int
    n: int
    invariants: Optional[tuple] = None
    _check: bool = field(default=True, compare=False, repr=False)

    def __post_init__(self):
        if not 1 <= self.k <= self.n - 1:
            raise ValueError(f"need 1 <= k <= n-1, got G({self.k},{self.n})")
        if self.invariants is not None:
            inv = tuple(Fraction(x) for x in self.invariants)
            if len(inv) == self.n:
                inv = (Fraction(1),) + inv
            if len(inv) != self.n + 1:
                raise ValueError(f"expected {self.n} invariants I_1..I_n, got {len(inv)}")
            if inv[0] != 1:
                raise ValueError("I_0 must be 1")
            object.__setattr__(self, "invariants", inv)
        if self._check and not 1 < self.k < self.n - 1:
            warnings.warn(f"G({self.k},{self.n}) is outside the range 1 < k < n-1",
                          StandingAssumptionWarning, stacklevel=3)

    @classmethod
    def symbolic(cls, k: int, n: int) -> "RingSpec":
        return cls(k, n, None)

    @classmethod
    def undeformed(cls, k: int, n: int) -> "RingSpec":
        return cls(k, n, (1,) + (0,) * n)

    @classmethod
    def from_matrix(cls, k: int, B: BMatrix) -> "RingSpec":
        return cls(k, B.n, char_invariants(B))

    @classmethod
    def random_generic(cls, k: int, n: int, rng: random.Random | None = None,
                       bound: int = 9) -> "RingSpec":
        """Random small-integer invariants whose companion matrix avoids the degenerate locus."""
        rng = rng or random.Random()
        while True:
            inv = (1,) + tuple(rng.randint(-bound, bound) for _ in range(n))
            if any(inv[1:]) and not is_degenerate(companion(inv), k).degenerate:
                return cls(k, n, inv)

    @property
    def is_symbolic(self) -> bool:
        return self.invariants is None

    @property
    def top_degree(self) -> int:
        return self.k * (self.n - self.k)

    def I(self, i: int) -> Coefficient:
        if i < 0 or i > self.n:
            return Fraction(0)
        if self.invariants is None:
            return I_var(i) if i else Fraction(1)
        return self.invariants[i]

    def evaluated(self, values: Sequence) -> "RingSpec":
        return RingSpec(self.k, self.n, tuple(values), _check=False)

    def kappa(self, lam=()) -> SchurClass:
        return SchurClass.kappa(lam, self.k)

    def to_json(self) -> dict:
        from .coeffs import format_rational
        return {"k": self.k, "n": self.n,
                "I": None if self.invariants is None else [format_rational(x) for x in self.invariants]}


def max_degree(spec: RingSpec) -> int:
    env = os.environ.get("POLY_MAX_DEGREE")
    return int(env) if env else spec.top_degree


@lru_cache(maxsize=None)
def _k1_power(k: int, i: int) -> SchurClass:
    return power(SchurClass.kappa((1,), k), i)


@lru_cache(maxsize=4096)
def kappa_tilde(spec: RingSpec, r: int) -> SchurClass:
    """The deformed generator ``kt_(r)`` in the Schur basis of ``Lambda_k``."""
    if r < 0:
        return SchurClass({}, spec.k)
    out = SchurClass({}, spec.k)
    for i in range(min(r, spec.n) + 1):
        c = spec.I(i)
        if c:
            out = out + (SchurClass.one_row(r - i, spec.k) * _k1_power(spec.k, i)).scale(c)
    return out


def relation_generators(spec: RingSpec, s: int) -> list[tuple[int, P.Partition]]:
    """Labels ``(r, mu)`` of the spanning products ``kt_(r) k_mu`` in degree ``s``."""
    return [(r, mu) for r in range(spec.n - spec.k + 1, s + 1)
            for mu in P.enumerate_partitions(s - r, spec.k)]


def relation_span(spec: RingSpec, s: int) -> list[SchurClass]:
    return [kappa_tilde(spec, r) * spec.kappa(mu) for r, mu in relation_generators(spec, s)]


def _vector(x: SchurClass) -> dict:
    vec = {}
    for lam, c in x.terms.items():
        c = simplify(c)
        if isinstance(c, Poly):
            raise ValueError("normal forms need numeric coefficients")
        vec[lam] = c
    return vec


@lru_cache(maxsize=1024)
def _echelon(spec: RingSpec, s: int) -> linalg.Echelon:
    if spec.is_symbolic:
        raise ValueError("normal forms and products need numeric invariants")
    ech = linalg.Echelon(P.enumerate_partitions(s, spec.k))
    for rel in relation_span(spec, s):
        ech.add(_vector(rel))
    return ech


@dataclass(frozen=True)
class RankReport:
    dim: int
    rank: int
    mode: str          # "exact" or "random-evaluation"


def _symbolic_rank_exact(matrix: list[list[Poly]]) -> int:
    rows = len(matrix)
    cols = len(matrix[0]) if rows else 0
    for t in range(min(rows, cols), 0, -1):
        for rs in combinations(range(rows), t):
            for cs in combinations(range(cols), t):
                if linalg.cofactor_det([[matrix[i][j] for j in cs] for i in rs]):
                    return t
    return 0


def graded_dim_report(spec: RingSpec, s: int, mode: str = "auto",
                      rng: random.Random | None = None, samples: int = 3) -> RankReport:
    """Dimension of the degree-``s`` quotient and how its rank was obtained.

    Numeric invariants are always exact.  For symbolic invariants ``mode`` is
    ``"exact"`` (nonvanishing symbolic minors, small matrices only),
    ``"random"`` (maximum rank over random rational evaluations; wrong only
    with probability at most deg/10^6 per sample), or ``"auto"``.
    """
    basis = P.enumerate_partitions(s, spec.k)
    if not spec.is_symbolic:
        return RankReport(len(basis) - _echelon(spec, s).rank, _echelon(spec, s).rank, "exact")
    rels = relation_span(spec, s)
    if not rels:
        return RankReport(len(basis), 0, "exact")
    matrix = [[as_poly(rel.coefficient(lam)) for lam in basis] for rel in rels]
    small = len(rels) <= EXACT_MINOR_LIMIT and len(basis) <= EXACT_MINOR_LIMIT
    if mode == "exact" or (mode == "auto" and small):
        if not small:
            raise ValueError(f"exact symbolic rank limited to {EXACT_MINOR_LIMIT}x{EXACT_MINOR_LIMIT}")
        r = _symbolic_rank_exact(matrix)
        return RankReport(len(basis) - r, r, "exact")
    if mode not in ("auto", "random"):
        raise ValueError(f"unknown rank mode {mode!r}")
    rng = rng or random.Random(0)
    best = 0
    for _ in range(samples):
        point = {f"I{i}": Fraction(rng.randint(-10**6, 10**6), rng.randint(1, 1000))
                 for i in range(1, spec.n + 1)}
        best = max(best, linalg.rank([[p.evaluate(point) for p in row] for row in matrix]))
    return RankReport(len(basis) - best, best, "random-evaluation")


def graded_dim(spec: RingSpec, s: int, **kwargs) -> int:
    return graded_dim_report(spec, s, **kwargs).dim


def graded_dims(spec: RingSpec, top: Optional[int] = None, **kwargs) -> list[RankReport]:
    top = max_degree(spec) if top is None else top
    return [graded_dim_report(spec, s, **kwargs) for s in range(top + 1)]


def _degree_of(x: SchurClass) -> Optional[int]:
    w = x.weights()
    if len(w) > 1:
        raise ValueError("class is not homogeneous")
    return next(iter(w)) if w else None


def normal_form(spec: RingSpec, x: SchurClass, s: Optional[int] = None) -> SchurClass:
    """Canonical representative of ``x`` modulo the degree-``s`` part of the ideal.

    The representative is supported on the non-pivot partitions of the
    reduced echelon form of :func:`relation_span`, columns taken in the
    canonical partition order.
    """
    if x.row_bound != spec.k:
        raise ValueError(f"class lives in {x.row_bound} rows, ring needs {spec.k}")
    d = _degree_of(x)
    if s is None:
        s = d
    if d is not None and d != s:
        raise ValueError(f"class has degree {d}, not {s}")
    if s is None or not x:
        return SchurClass({}, spec.k)
    return SchurClass(_echelon(spec, s).reduce(_vector(x)), spec.k)


def mult_mod(spec: RingSpec, a: SchurClass, b: SchurClass) -> SchurClass:
    _degree_of(a), _degree_of(b)
    prod = a * b
    return normal_form(spec, prod)


def kappa_tilde_lambda(spec: RingSpec, lam) -> SchurClass:
    """Giambelli-type determinant whose first row holds deformed generators."""
    lam = P.normalize(lam)
    if len(lam) > spec.k:
        raise ValueError(f"{lam} has more than {spec.k} rows")
    if not lam:
        return spec.kappa(())
    m = len(lam)
    matrix = [[kappa_tilde(spec, lam[0] + j) for j in range(m)]]
    for i in range(1, m):
        matrix.append([SchurClass.one_row(lam[i] + j - i, spec.k) for j in range(m)])
    return determinant(matrix, spec.k)


@dataclass(frozen=True)
class VLocusResult:
    dependent: Optional[bool]
    witness_minors: list
    members: list
    basis: list


def vlocus_test(spec: RingSpec, m: int, min_first_row: Optional[int] = None) -> VLocusResult:
    """Linear dependence of ``{kt_lam : |lam| = m, lam_1 >= n-k}``.

    Numeric invariants give the boolean answer.  Symbolic invariants give the
    maximal minors of the coefficient matrix instead; their common zero set is
    the dependence locus.
    """
    floor = spec.n - spec.k if min_first_row is None else min_first_row
    basis = P.enumerate_partitions(m, spec.k)
    members = [lam for lam in basis if lam and lam[0] >= floor]
    if not members:
        return VLocusResult(False, [], [], basis)
    rows = [kappa_tilde_lambda(spec, lam) for lam in members]
    if spec.is_symbolic:
        if len(members) > EXACT_MINOR_LIMIT + 1:
            raise ValueError("too many classes for symbolic minors")
        matrix = [[as_poly(row.coefficient(lam)) for lam in basis] for row in rows]
        return VLocusResult(None, linalg.maximal_minors(matrix), members, basis)
    matrix = [[Fraction(simplify(row.coefficient(lam))) for lam in basis] for row in rows]
    return VLocusResult(linalg.rank(matrix) < len(members), [], members, basis)


def b_eps_sides(k: int, n: int, r: int) -> tuple[SchurClass, SchurClass]:
    """Both sides of the expansion of ``h(k_(r))`` when ``B = eps I``."""
    if r <= n - k:
        raise ValueError(f"need r > n-k, got r={r} for G({k},{n})")
    spec = RingSpec(k, n, None, _check=False)
    lhs = SchurClass({}, k)
    for t in range(r + 1):
        term = SchurClass.one_row(r - t, k) * _k1_power(k, t)
        lhs = lhs + term.scale(EPS ** t * comb(k + r - 1, t))
    binding = {f"I{i}": EPS ** i * comb(n, i) for i in range(1, n + 1)}
    rhs = SchurClass({}, k)
    for j in range(k + r - n):
        kt = kappa_tilde(spec, r - j).map_coefficients(lambda c: as_poly(c).substitute(binding))
        rhs = rhs + (_k1_power(k, j) * kt).scale(EPS ** j * comb(k + r - n - 1, j))
    return lhs, rhs


def b_eps_identity_check(k: int, n: int, r: int) -> bool:
    lhs, rhs = b_eps_sides(k, n, r)
    return lhs == rhs


def augmentation_invariants(n: int, k: int) -> list[Poly]:
    """``I_m`` of ``diag((1+(k+1)eps) B + eps I, eps)`` as polynomials in ``I_i(B)`` and eps."""
    c = 1 + (k + 1) * EPS
    out = []
    for m in range(n + 2):
        total = Poly()
        for i in range(0, min(m, n) + 1):
            total = total + EPS ** (m - i) * comb(n + 1 - i, n + 1 - m) * I_var(i) * c ** i
        out.append(total)
    return out
